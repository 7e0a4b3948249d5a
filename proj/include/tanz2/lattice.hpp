#pragma once

#include "tanz2/complex.hpp"

#include <optional>

namespace tanz2 {

// points within this distance (in Re(z^2)) below a strip edge count as on it
inline constexpr double boundary_slack = 1e-9;

enum class HalfPlane { RePos, ReNeg, ImPos, ImNeg };

const char* half_plane_name(HalfPlane h);

// L_n. Writing s = Re(z^2) on the real axis family and s = -Re(z^2) on the
// imaginary one, the region is s in [lo*pi, hi*pi) inside half_plane.
struct Region {
  int index = 0;
  int k = 0;
  double lo = 0;
  double hi = 0;
  bool imaginary_family = false;
  HalfPlane half_plane = HalfPlane::RePos;
};

Region region(int n);

template <class R>
Point<R> zero(int n);

template <class R>
Point<R> pole(int n);

template <class R>
bool region_contains(int n, const Point<R>& z);

template <class R>
std::optional<int> region_of(const Point<R>& z);

// strip edges for a region, as used by the membership test
template <class R>
R strip_edge(int k);

}  // namespace tanz2
