#include "orbit_kernel.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>

namespace tanz2::kern {

namespace {

// a struct rather than bool so the shared kernel finds these helpers by ADL
struct M1 {
  bool b;
  friend M1 operator|(M1 a, M1 c) { return {a.b || c.b}; }
  friend M1 operator!(M1 a) { return {!a.b}; }
};

struct D1 {
  static constexpr int width = 1;
  using mask = M1;
  double v;

  static D1 set(double x) { return {x}; }
  static D1 load(const double* p) { return {*p}; }
  static mask none() { return {false}; }
  void store(double* p) const { *p = v; }

  friend D1 operator+(D1 a, D1 b) { return {a.v + b.v}; }
  friend D1 operator-(D1 a, D1 b) { return {a.v - b.v}; }
  friend D1 operator*(D1 a, D1 b) { return {a.v * b.v}; }
  friend D1 operator/(D1 a, D1 b) { return {a.v / b.v}; }
  friend mask operator<(D1 a, D1 b) { return {a.v < b.v}; }
  friend mask operator<=(D1 a, D1 b) { return {a.v <= b.v}; }
  friend mask operator>(D1 a, D1 b) { return {a.v > b.v}; }
  friend mask operator>=(D1 a, D1 b) { return {a.v >= b.v}; }
};

D1 abs(D1 a) { return {std::fabs(a.v)}; }
D1 floor(D1 a) { return {std::floor(a.v)}; }
D1 copysign(D1 mag, D1 sgn) { return {std::copysign(mag.v, sgn.v)}; }
D1 select(M1 m, D1 a, D1 b) { return m.b ? a : b; }
M1 andnot(M1 done, M1 m) { return {!done.b && m.b}; }
bool all(M1 m) { return m.b; }

D1 pow2i(D1 n) {
  std::uint64_t bits = static_cast<std::uint64_t>(static_cast<std::int64_t>(n.v) + 1023) << 52;
  double r;
  std::memcpy(&r, &bits, sizeof r);
  return {r};
}

}  // namespace

void classify_row_scalar(const OrbitKernelArgs& a, const double* xs, double y, int n, Cell* out) {
  for (int i = 0; i < n; ++i) classify_lanes<D1>(a, xs + i, &y, out + i);
}

void lane_math_scalar(const double* u, const double* x, double* s, double* c, double* e, int n) {
  for (int i = 0; i < n; ++i) lane_math<D1>(u + i, x + i, s + i, c + i, e + i);
}

}  // namespace tanz2::kern
