#pragma once

#include "tanz2/grid.hpp"
#include "tanz2/kernels.hpp"
#include "tanz2/orbit.hpp"

#include <optional>
#include <vector>

namespace tanz2 {

inline constexpr int default_budget = 2000;
inline constexpr int default_resolution = 512;
inline constexpr double cycle_match_radius = 1e-4;

// requested > 0 wins, then THREADS, then hardware parallelism
int resolve_workers(int requested = 0);

struct ScanOptions {
  int workers = 0;
  std::optional<KernelKind> kernel;  // unset: default_kernel()
};

ClassifiedGrid scan_dynamical(const Parameter& p, const GridSpec& spec, int budget, const ScanOptions& opt = {});

int class_of(const ParameterClass& pc);

ClassifiedGrid scan_parameter(const GridSpec& spec, int budget, const ScanOptions& opt = {});

// 4-connected component of equal class around the seed, row-major 0/1 mask
std::vector<std::uint8_t> flood_component(const ClassifiedGrid& grid, std::pair<int, int> seed_pixel);

// Grid evidence only: whether the pixels of lambda*i and -lambda*i sit in the
// 4-connected component of the origin's pixel.
struct BasinHeuristic {
  std::pair<int, int> origin_pixel, plus_pixel, minus_pixel;
  bool plus_connected = false;
  bool minus_connected = false;
  int component_size = 0;
};

BasinHeuristic immediate_basin_heuristic(const Parameter& p, const ClassifiedGrid& grid);

}  // namespace tanz2
