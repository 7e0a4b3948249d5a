#pragma once

#include "tanz2/grid.hpp"

#include <vector>

namespace tanz2 {

// per-pixel orbit classification, written once over a lane type and built
// for plain doubles and for AVX2; both builds give identical bits
struct OrbitKernelArgs {
  double lambda_re = 0;
  double lambda_im = 0;
  int budget = 0;
  int period = 0;               // 0 when there is no attracting cycle besides the origin
  std::vector<double> cycle_re;  // cycle points to match against
  std::vector<double> cycle_im;
};

enum class KernelKind { Scalar, Avx2 };

const char* kernel_name(KernelKind k);
bool kernel_available(KernelKind k);
// TANZ2_KERNEL=scalar|avx2 overrides the CPU check
KernelKind default_kernel();

void classify_row(KernelKind k, const OrbitKernelArgs& args, const double* xs, double y, int n, Cell* out);

// lane math exposed for equivalence tests: sin, cos of u and exp(x) for x <= 0
void lane_math(KernelKind k, const double* u, const double* x, double* s, double* c, double* e, int n);

}  // namespace tanz2
