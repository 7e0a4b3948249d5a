#include "tanz2/lattice.hpp"

#include <cmath>

namespace tanz2 {

const char* half_plane_name(HalfPlane h) {
  switch (h) {
    case HalfPlane::RePos: return "RePos";
    case HalfPlane::ReNeg: return "ReNeg";
    case HalfPlane::ImPos: return "ImPos";
    case HalfPlane::ImNeg: return "ImNeg";
  }
  return "?";
}

namespace {

int floor_div2(int n) { return n >= 0 ? n / 2 : -((1 - n) / 2); }

}  // namespace

Region region(int n) {
  Region r;
  r.index = n;
  int m = floor_div2(n);
  if (n % 2 == 0) {
    r.imaginary_family = false;
    r.k = m >= 0 ? m : -m - 1;
    r.half_plane = m >= 0 ? HalfPlane::RePos : HalfPlane::ReNeg;
  } else {
    r.imaginary_family = true;
    r.k = m >= 0 ? m : -m - 1;
    r.half_plane = m >= 0 ? HalfPlane::ImPos : HalfPlane::ImNeg;
  }
  r.lo = r.k + 0.5;
  r.hi = r.k + 1.5;
  return r;
}

template <class R>
R strip_edge(int k) {
  return (R(k) + R(0.5)) * pi_v<R>() - R(boundary_slack);
}

template <class R>
Point<R> zero(int n) {
  using std::sqrt;
  int m = floor_div2(n);
  R pi = pi_v<R>();
  if (n % 2 == 0) {
    if (m >= 0) return Point<R>(sqrt(R(m) * pi), R(0));
    return Point<R>(-sqrt(R(-m) * pi), R(0));
  }
  if (m >= 0) return Point<R>(R(0), sqrt(R(m + 1) * pi));
  return Point<R>(R(0), -sqrt(R(-m) * pi));
}

template <class R>
Point<R> pole(int n) {
  using std::abs;
  using std::sqrt;
  int m = floor_div2(n);
  R pi = pi_v<R>();
  R mag = sqrt(abs(R(m) + R(0.5)) * pi);
  if (n % 2 == 0) return m >= 0 ? Point<R>(mag, R(0)) : Point<R>(-mag, R(0));
  return m >= 0 ? Point<R>(R(0), mag) : Point<R>(R(0), -mag);
}

template <class R>
bool region_contains(int n, const Point<R>& z) {
  if (z.at_infinity) return false;
  Region r = region(n);
  R x = z.z.re, y = z.z.im;
  R u = (x - y) * (x + y);
  R s = r.imaginary_family ? -u : u;
  if (!(s >= strip_edge<R>(r.k) && s < strip_edge<R>(r.k + 1))) return false;
  switch (r.half_plane) {
    case HalfPlane::RePos: return x >= 0;
    case HalfPlane::ReNeg: return x < 0;
    case HalfPlane::ImPos: return y >= 0;
    case HalfPlane::ImNeg: return y < 0;
  }
  return false;
}

template <class R>
std::optional<int> region_of(const Point<R>& z) {
  using std::floor;
  if (z.at_infinity) return std::nullopt;
  R x = z.z.re, y = z.z.im;
  R u = (x - y) * (x + y);
  bool imag = u < 0;
  R s = imag ? -u : u;
  if (s < strip_edge<R>(0)) return std::nullopt;
  R kr = floor((s + R(boundary_slack)) / pi_v<R>() - R(0.5));
  int k0 = static_cast<int>(kr);
  for (int k : {k0, k0 - 1, k0 + 1}) {
    if (k < 0) continue;
    int n;
    if (!imag)
      n = x >= 0 ? 2 * k : -2 * k - 2;
    else
      n = y >= 0 ? 2 * k + 1 : -2 * k - 1;
    if (region_contains(n, z)) return n;
  }
  return std::nullopt;
}

template double strip_edge<double>(int);
template quad strip_edge<quad>(int);
template Point<double> zero<double>(int);
template Point<quad> zero<quad>(int);
template Point<double> pole<double>(int);
template Point<quad> pole<quad>(int);
template bool region_contains(int, const Point<double>&);
template bool region_contains(int, const Point<quad>&);
template std::optional<int> region_of(const Point<double>&);
template std::optional<int> region_of(const Point<quad>&);

}  // namespace tanz2
