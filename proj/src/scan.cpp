#include "tanz2/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <string>
#include <thread>

namespace tanz2 {

void GridSpec::validate() const {
  if (cols < 1 || rows < 1) throw Error(Errc::BadArgument, "grid needs at least one row and column");
  if (!(width > 0) || !(height > 0)) throw Error(Errc::BadArgument, "grid width and height must be positive");
}

std::pair<int, int> GridSpec::pixel_of(Complex<double> z) const {
  double fx = (z.re - (center.re - width / 2)) / width * cols;
  double fy = ((center.im + height / 2) - z.im) / height * rows;
  int c = std::clamp(static_cast<int>(std::floor(fx)), 0, cols - 1);
  int r = std::clamp(static_cast<int>(std::floor(fy)), 0, rows - 1);
  return {c, r};
}

GridSpec GridSpec::from_corners(double x0, double y0, double x1, double y1, int cols, int rows) {
  GridSpec g;
  g.center = {(x0 + x1) / 2, (y0 + y1) / 2};
  g.width = x1 - x0;
  g.height = y1 - y0;
  g.cols = cols;
  g.rows = rows;
  g.validate();
  return g;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) throw Error(Errc::BadArgument, "THREADS must be a positive integer");
    return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

template <class RowFn>
void for_rows(int rows, int workers, RowFn fn) {
  workers = std::max(1, std::min(workers, rows));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int r; (r = next.fetch_add(1)) < rows;) fn(r);
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

}  // namespace

ClassifiedGrid scan_dynamical(const Parameter& p, const GridSpec& spec, int budget, const ScanOptions& opt) {
  spec.validate();
  if (budget < 1) throw Error(Errc::BadArgument, "budget must be positive");
  OrbitKernelArgs args;
  args.lambda_re = p.lambda.re;
  args.lambda_im = p.lambda.im;
  args.budget = budget;
  ParameterClass pc = classify_parameter(p, std::max(budget, default_budget));
  if (pc.verdict == Verdict::AttractingCycle) {
    args.period = pc.period;
    for (auto z : cycle_points(p, *pc.cycle)) {
      args.cycle_re.push_back(z.re);
      args.cycle_im.push_back(z.im);
    }
  }
  KernelKind kind = opt.kernel ? *opt.kernel : default_kernel();
  if (!kernel_available(kind)) throw Error(Errc::BadArgument, std::string(kernel_name(kind)) + " kernel not available");

  ClassifiedGrid g{spec, std::vector<Cell>(static_cast<size_t>(spec.cols) * spec.rows)};
  std::vector<double> xs(spec.cols);
  for (int c = 0; c < spec.cols; ++c) xs[c] = spec.x_of(c);
  for_rows(spec.rows, resolve_workers(opt.workers), [&](int r) {
    classify_row(kind, args, xs.data(), spec.y_of(r), spec.cols, &g.cells[static_cast<size_t>(r) * spec.cols]);
  });
  return g;
}

int class_of(const ParameterClass& pc) {
  switch (pc.verdict) {
    case Verdict::OriginOnly: return class_origin;
    case Verdict::AttractingCycle: return pc.period;
    case Verdict::SingularEscape: return class_escape;
    case Verdict::Undetermined: return class_undetermined;
  }
  return class_undetermined;
}

ClassifiedGrid scan_parameter(const GridSpec& spec, int budget, const ScanOptions& opt) {
  spec.validate();
  if (budget < 1) throw Error(Errc::BadArgument, "budget must be positive");
  ClassifiedGrid g{spec, std::vector<Cell>(static_cast<size_t>(spec.cols) * spec.rows)};
  for_rows(spec.rows, resolve_workers(opt.workers), [&](int r) {
    for (int c = 0; c < spec.cols; ++c) {
      Complex<double> lam = spec.at(c, r);
      Cell& cell = g.at(c, r);
      if (lam.re == 0 && lam.im == 0) {
        cell = Cell{class_undetermined, 0, 0};
        continue;
      }
      ParameterClass pc = classify_parameter(Parameter(lam), budget);
      cell.class_id = class_of(pc);
      cell.period = pc.verdict == Verdict::AttractingCycle ? pc.period : (pc.verdict == Verdict::OriginOnly ? 1 : 0);
      cell.steps = pc.singular_orbit.steps_used;
    }
  });
  return g;
}

std::vector<std::uint8_t> flood_component(const ClassifiedGrid& grid, std::pair<int, int> seed) {
  const auto& s = grid.spec;
  auto [c0, r0] = seed;
  if (c0 < 0 || r0 < 0 || c0 >= s.cols || r0 >= s.rows) throw Error(Errc::BadArgument, "seed outside the grid");
  int cls = grid.at(c0, r0).class_id;
  if (cls == class_undetermined) throw Error(Errc::SeedUndetermined, "seed pixel has no definite class");
  std::vector<std::uint8_t> mask(static_cast<size_t>(s.cols) * s.rows, 0);
  std::deque<std::pair<int, int>> q{{c0, r0}};
  mask[static_cast<size_t>(r0) * s.cols + c0] = 1;
  const int dc[4] = {1, -1, 0, 0}, dr[4] = {0, 0, 1, -1};
  while (!q.empty()) {
    auto [c, r] = q.front();
    q.pop_front();
    for (int k = 0; k < 4; ++k) {
      int nc = c + dc[k], nr = r + dr[k];
      if (nc < 0 || nr < 0 || nc >= s.cols || nr >= s.rows) continue;
      size_t idx = static_cast<size_t>(nr) * s.cols + nc;
      if (mask[idx] || grid.cells[idx].class_id != cls) continue;
      mask[idx] = 1;
      q.emplace_back(nc, nr);
    }
  }
  return mask;
}

BasinHeuristic immediate_basin_heuristic(const Parameter& p, const ClassifiedGrid& grid) {
  BasinHeuristic h;
  const auto& s = grid.spec;
  h.origin_pixel = s.pixel_of({0.0, 0.0});
  h.plus_pixel = s.pixel_of(p.asymptotic_value());
  h.minus_pixel = s.pixel_of(-p.asymptotic_value());
  if (grid.at(h.origin_pixel.first, h.origin_pixel.second).class_id != class_origin) return h;
  auto mask = flood_component(grid, h.origin_pixel);
  auto in = [&](std::pair<int, int> px) { return mask[static_cast<size_t>(px.second) * s.cols + px.first] != 0; };
  h.plus_connected = in(h.plus_pixel);
  h.minus_connected = in(h.minus_pixel);
  h.component_size = static_cast<int>(std::count(mask.begin(), mask.end(), 1));
  return h;
}

}  // namespace tanz2
