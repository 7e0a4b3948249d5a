#include "tanz2/error.hpp"
#include "tanz2/kernels.hpp"

#include <cstdlib>
#include <string>

namespace tanz2 {

namespace kern {
void classify_row_scalar(const OrbitKernelArgs& a, const double* xs, double y, int n, Cell* out);
void lane_math_scalar(const double* u, const double* x, double* s, double* c, double* e, int n);
#if TANZ2_HAVE_AVX2
void classify_row_avx2(const OrbitKernelArgs& a, const double* xs, double y, int n, Cell* out);
void lane_math_avx2(const double* u, const double* x, double* s, double* c, double* e, int n);
#endif
}  // namespace kern

const char* kernel_name(KernelKind k) { return k == KernelKind::Avx2 ? "avx2" : "scalar"; }

bool kernel_available(KernelKind k) {
  if (k == KernelKind::Scalar) return true;
#if TANZ2_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

KernelKind default_kernel() {
  if (const char* env = std::getenv("TANZ2_KERNEL")) {
    std::string s(env);
    if (s == "scalar") return KernelKind::Scalar;
    if (s == "avx2") {
      if (!kernel_available(KernelKind::Avx2)) throw Error(Errc::BadArgument, "avx2 kernel not available here");
      return KernelKind::Avx2;
    }
    if (!s.empty()) throw Error(Errc::BadArgument, "TANZ2_KERNEL must be scalar or avx2");
  }
  return kernel_available(KernelKind::Avx2) ? KernelKind::Avx2 : KernelKind::Scalar;
}

void classify_row(KernelKind k, const OrbitKernelArgs& args, const double* xs, double y, int n, Cell* out) {
#if TANZ2_HAVE_AVX2
  if (k == KernelKind::Avx2) return kern::classify_row_avx2(args, xs, y, n, out);
#endif
  (void)k;
  kern::classify_row_scalar(args, xs, y, n, out);
}

void lane_math(KernelKind k, const double* u, const double* x, double* s, double* c, double* e, int n) {
#if TANZ2_HAVE_AVX2
  if (k == KernelKind::Avx2) return kern::lane_math_avx2(u, x, s, c, e, n);
#endif
  (void)k;
  kern::lane_math_scalar(u, x, s, c, e, n);
}

}  // namespace tanz2
