#include "orbit_kernel.hpp"

#include <immintrin.h>

namespace tanz2::kern {

void classify_row_scalar(const OrbitKernelArgs& a, const double* xs, double y, int n, Cell* out);
void lane_math_scalar(const double* u, const double* x, double* s, double* c, double* e, int n);

namespace {

struct M4 {
  __m256d m;
  friend M4 operator|(M4 a, M4 b) { return {_mm256_or_pd(a.m, b.m)}; }
  friend M4 operator!(M4 a) { return {_mm256_xor_pd(a.m, _mm256_castsi256_pd(_mm256_set1_epi64x(-1)))}; }
};

struct D4 {
  static constexpr int width = 4;
  using mask = M4;
  __m256d v;

  static D4 set(double x) { return {_mm256_set1_pd(x)}; }
  static D4 load(const double* p) { return {_mm256_loadu_pd(p)}; }
  static M4 none() { return {_mm256_setzero_pd()}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  friend D4 operator+(D4 a, D4 b) { return {_mm256_add_pd(a.v, b.v)}; }
  friend D4 operator-(D4 a, D4 b) { return {_mm256_sub_pd(a.v, b.v)}; }
  friend D4 operator*(D4 a, D4 b) { return {_mm256_mul_pd(a.v, b.v)}; }
  friend D4 operator/(D4 a, D4 b) { return {_mm256_div_pd(a.v, b.v)}; }
  friend M4 operator<(D4 a, D4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ)}; }
  friend M4 operator<=(D4 a, D4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ)}; }
  friend M4 operator>(D4 a, D4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
  friend M4 operator>=(D4 a, D4 b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ)}; }
};

inline __m256d sign_bit() { return _mm256_set1_pd(-0.0); }

D4 abs(D4 a) { return {_mm256_andnot_pd(sign_bit(), a.v)}; }
D4 floor(D4 a) { return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC)}; }
D4 copysign(D4 mag, D4 sgn) {
  return {_mm256_or_pd(_mm256_andnot_pd(sign_bit(), mag.v), _mm256_and_pd(sign_bit(), sgn.v))};
}
D4 select(M4 m, D4 a, D4 b) { return {_mm256_blendv_pd(b.v, a.v, m.m)}; }
M4 andnot(M4 done, M4 m) { return {_mm256_andnot_pd(done.m, m.m)}; }
bool all(M4 m) { return _mm256_movemask_pd(m.m) == 0xF; }

// 2^n for integral n in [-1022, 1023]
D4 pow2i(D4 n) {
  __m256d t = _mm256_add_pd(n.v, _mm256_set1_pd(4503599627370496.0 + 1023.0));
  return {_mm256_castsi256_pd(_mm256_slli_epi64(_mm256_castpd_si256(t), 52))};
}

}  // namespace

void classify_row_avx2(const OrbitKernelArgs& a, const double* xs, double y, int n, Cell* out) {
  double ys[4] = {y, y, y, y};
  int i = 0;
  for (; i + 4 <= n; i += 4) classify_lanes<D4>(a, xs + i, ys, out + i);
  if (i < n) classify_row_scalar(a, xs + i, y, n - i, out + i);
}

void lane_math_avx2(const double* u, const double* x, double* s, double* c, double* e, int n) {
  int i = 0;
  for (; i + 4 <= n; i += 4) lane_math<D4>(u + i, x + i, s + i, c + i, e + i);
  if (i < n) lane_math_scalar(u + i, x + i, s + i, c + i, e + i, n - i);
}

}  // namespace tanz2::kern
