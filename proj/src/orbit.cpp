#include "tanz2/orbit.hpp"

#include <algorithm>
#include <cmath>

namespace tanz2 {

const char* cycle_kind_name(CycleKind k) {
  switch (k) {
    case CycleKind::SuperAttracting: return "SuperAttracting";
    case CycleKind::Attracting: return "Attracting";
    case CycleKind::Neutral: return "Neutral";
    case CycleKind::Repelling: return "Repelling";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::OriginOnly: return "OriginOnly";
    case Verdict::AttractingCycle: return "AttractingCycle";
    case Verdict::Undetermined: return "Undetermined";
    case Verdict::SingularEscape: return "SingularEscape";
  }
  return "?";
}

CycleKind kind_of_multiplier(Complex<double> rho) {
  double m = abs(rho);
  if (m < super_attracting_bound) return CycleKind::SuperAttracting;
  if (m < 1 - neutral_band) return CycleKind::Attracting;
  if (m <= 1 + neutral_band) return CycleKind::Neutral;
  return CycleKind::Repelling;
}

namespace {

struct Return {
  Complex<double> value;
  Complex<double> slope;
  bool ok = true;
};

// f^p(z) together with its derivative
Return first_return(const Parameter& p, Complex<double> z, int period) {
  Return r{z, {1.0, 0.0}, true};
  for (int i = 0; i < period; ++i) {
    EvalResult<double> e = eval_detailed(p, r.value);
    if (!e.finite()) {
      r.ok = false;
      return r;
    }
    r.slope = r.slope * derivative(p, ComplexValue(r.value));
    r.value = e.value;
  }
  return r;
}

}  // namespace

Complex<double> multiplier(const Parameter& p, const ComplexValue& z0, int period) {
  if (period < 1) throw Error(Errc::BadArgument, "period must be at least 1");
  if (z0.at_infinity) throw Error(Errc::PoleOnCycle, "cycle through infinity");
  Complex<double> rho(1.0, 0.0);
  Complex<double> z = z0.z;
  for (int i = 0; i < period; ++i) {
    EvalResult<double> e = eval_detailed(p, z);
    if (!e.finite()) throw Error(Errc::PoleOnCycle, "orbit meets a pole", i);
    rho = rho * derivative(p, ComplexValue(z));
    z = e.value;
  }
  return rho;
}

std::optional<CycleInfo> detect_cycle(const OrbitRecord<double>& orbit, double cycle_tol, int p_max) {
  const auto& pts = orbit.points;
  if (orbit.fate == Fate::HitPole || orbit.fate == Fate::Overflowed) return std::nullopt;
  int n = static_cast<int>(pts.size());
  if (n < 3) return std::nullopt;
  int found = 0;
  for (int per = 1; per <= p_max && !found; ++per) {
    int tail = std::max(n / 4, 2 * per);
    if (tail + per > n) break;
    bool ok = true;
    for (int i = n - tail; i + per < n; ++i) {
      if (!(abs(pts[i + per].z - pts[i].z) < cycle_tol)) {
        ok = false;
        break;
      }
    }
    if (ok) found = per;
  }
  if (!found) return std::nullopt;

  const Parameter& p = orbit.param;
  Complex<double> z = pts.back().z;
  Return r = first_return(p, z, found);
  for (int it = 0; it < 60 && r.ok; ++it) {
    Complex<double> g = r.value - z;
    if (abs(g) < newton_residual) break;
    Complex<double> dg = r.slope - Complex<double>(1.0, 0.0);
    if (norm(dg) == 0) {
      r.ok = false;
      break;
    }
    z = z - g / dg;
    r = first_return(p, z, found);
  }
  if (!r.ok) return std::nullopt;
  double res = abs(r.value - z);
  if (!(res < newton_residual)) return std::nullopt;

  CycleInfo c;
  c.period = found;
  c.representative = ComplexValue(z);
  c.multiplier = multiplier(p, c.representative, found);
  c.kind = kind_of_multiplier(c.multiplier);
  c.residual = res;
  return c;
}

std::vector<Complex<double>> cycle_points(const Parameter& p, const CycleInfo& c) {
  std::vector<Complex<double>> out{c.representative.z};
  Complex<double> z = c.representative.z;
  for (int i = 1; i < c.period; ++i) {
    EvalResult<double> e = eval_detailed(p, z);
    if (!e.finite()) break;
    z = e.value;
    out.push_back(z);
  }
  return out;
}

namespace {

// Both asymptotic values have the same image, so the orbit is iterated from
// that image and the seed is only prepended. Convergence tests then never
// compare against the seed, which keeps results equivariant under lambda ->
// conj(lambda) (whose seed is the conjugate of the other asymptotic value).
OrbitRecord<double> merged_singular_orbit(const Parameter& p, int budget) {
  ComplexValue seed(p.asymptotic_value());
  EvalResult<double> first = eval_detailed(p, seed.z);
  if (!first.finite()) {
    Fate f = first.status == EvalStatus::Pole ? Fate::HitPole : Fate::Overflowed;
    return OrbitRecord<double>{p, {seed, ComplexValue::infinity()}, f, 1};
  }
  if (budget == 1) return OrbitRecord<double>{p, {seed, ComplexValue(first.value)}, Fate::BudgetExhausted, 1};
  OrbitRecord<double> rec = iterate(p, ComplexValue(first.value), budget - 1);
  rec.points.insert(rec.points.begin(), seed);
  rec.steps_used += 1;
  return rec;
}

}  // namespace

ParameterClass classify_parameter(const Parameter& p, int budget) {
  if (budget < 1) throw Error(Errc::BadArgument, "budget must be positive");
  ParameterClass pc{.singular_orbit = merged_singular_orbit(p, budget), .cycle = std::nullopt};
  const auto& orbit = pc.singular_orbit;
  if (orbit.fate == Fate::HitPole || orbit.fate == Fate::Overflowed) {
    pc.verdict = Verdict::SingularEscape;
    return pc;
  }
  int small = 0;
  for (const auto& q : orbit.points) {
    small = abs(q.z) < origin_capture ? small + 1 : 0;
    if (small >= 3) {
      pc.verdict = Verdict::OriginOnly;
      return pc;
    }
  }
  auto c = detect_cycle(orbit);
  if (c && (c->kind == CycleKind::Attracting || c->kind == CycleKind::SuperAttracting)) {
    auto pts = cycle_points(p, *c);
    bool through_origin = std::any_of(pts.begin(), pts.end(), [](auto q) { return abs(q) < origin_capture; });
    if (!through_origin) {
      pc.verdict = Verdict::AttractingCycle;
      pc.period = c->period;
      pc.cycle = c;
      return pc;
    }
  }
  pc.cycle = c;
  pc.verdict = Verdict::Undetermined;
  return pc;
}

}  // namespace tanz2
