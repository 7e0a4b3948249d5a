#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tanz2 {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CheckOptions {
  std::uint64_t seed = 20240611;
  int samples = 1000;
  int metric_samples = 10000;
  int cantor_words = 100;
  int cantor_depth = 12;
  int basin_resolution = 512;
  int parameter_resolution = 128;
};

CheckResult check_symmetry(const CheckOptions& o);
CheckResult check_derivative(const CheckOptions& o);
CheckResult check_inverse(const CheckOptions& o);
CheckResult check_cantor_regime(const CheckOptions& o);
CheckResult check_conjugacy(const CheckOptions& o);
CheckResult check_metric(const CheckOptions& o);
CheckResult check_single_cycle(const CheckOptions& o);
CheckResult check_determinism(const CheckOptions& o);

std::vector<CheckResult> run_all_checks(const CheckOptions& o = {});

std::string format_result(const CheckResult& r);

}  // namespace tanz2
