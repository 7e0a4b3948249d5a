#pragma once

#include "tanz2/map.hpp"

#include <optional>

namespace tanz2 {

inline constexpr double default_cycle_tol = 1e-9;
inline constexpr int default_p_max = 64;
inline constexpr double super_attracting_bound = 1e-8;
inline constexpr double neutral_band = 1e-6;
inline constexpr double origin_capture = 1e-6;
inline constexpr double newton_residual = 1e-12;

enum class CycleKind { SuperAttracting, Attracting, Neutral, Repelling };

const char* cycle_kind_name(CycleKind k);

CycleKind kind_of_multiplier(Complex<double> rho);

struct CycleInfo {
  int period = 1;
  ComplexValue representative;
  Complex<double> multiplier;
  CycleKind kind = CycleKind::Repelling;
  double residual = 0;  // |f^p(z) - z| after refinement
};

enum class Verdict { OriginOnly, AttractingCycle, Undetermined, SingularEscape };

const char* verdict_name(Verdict v);

struct ParameterClass {
  Verdict verdict = Verdict::Undetermined;
  int period = 0;  // set for AttractingCycle
  OrbitRecord<double> singular_orbit;
  std::optional<CycleInfo> cycle;
};

Complex<double> multiplier(const Parameter& p, const ComplexValue& z0, int period);

std::optional<CycleInfo> detect_cycle(const OrbitRecord<double>& orbit, double cycle_tol = default_cycle_tol,
                                      int p_max = default_p_max);

ParameterClass classify_parameter(const Parameter& p, int budget);

// all points of a cycle, starting at the representative
std::vector<Complex<double>> cycle_points(const Parameter& p, const CycleInfo& c);

}  // namespace tanz2
