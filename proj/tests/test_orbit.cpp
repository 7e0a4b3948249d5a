#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanz2/lattice.hpp"
#include "tanz2/orbit.hpp"

#include <cmath>
#include <random>

using namespace tanz2;
using C = Complex<double>;

namespace {
// period-2 attracting cycle found by a parameter scan, |rho| about 0.03
const C period_two(2.0, 0.1);
}  // namespace

TEST_CASE("origin is a super-attracting fixed point") {
  for (C lam : {C(0.85), C(2, 0.1), C(-0.3, 1.7)}) CHECK(abs(multiplier(Parameter(lam), ComplexValue(C(0.0)), 1)) == 0);
  auto rec = iterate(Parameter(0.85, 0), ComplexValue(C(0.0)), 100);
  auto c = detect_cycle(rec);
  REQUIRE(c.has_value());
  CHECK(c->period == 1);
  CHECK(abs(c->multiplier) == 0);
  CHECK(c->kind == CycleKind::SuperAttracting);
}

TEST_CASE("multiplier kinds") {
  CHECK(kind_of_multiplier(C(0.0)) == CycleKind::SuperAttracting);
  CHECK(kind_of_multiplier(C(0.5, 0.1)) == CycleKind::Attracting);
  CHECK(kind_of_multiplier(C(0.0, 1.0)) == CycleKind::Neutral);
  CHECK(kind_of_multiplier(C(1.0 + 5e-7, 0)) == CycleKind::Neutral);
  CHECK(kind_of_multiplier(C(1.1, 0)) == CycleKind::Repelling);
}

TEST_CASE("singular orbit at 0.85 is captured by the origin") {
  Parameter p(0.85, 0);
  auto rec = iterate(p, ComplexValue(p.asymptotic_value()), 500);
  CHECK(rec.fate == Fate::ConvergedToPoint);
  CHECK(abs(rec.points.back().z) < 1e-12);
  auto c = detect_cycle(rec);
  REQUIRE(c.has_value());
  CHECK(c->period == 1);
}

TEST_CASE("classify examples") {
  CHECK(classify_parameter(Parameter(0.85, 0), 2000).verdict == Verdict::OriginOnly);
  CHECK(classify_parameter(Parameter(0.1, 0), 2000).verdict == Verdict::OriginOnly);
  auto pc = classify_parameter(Parameter(period_two), 2000);
  CHECK(pc.verdict == Verdict::AttractingCycle);
  CHECK(pc.period == 2);
  REQUIRE(pc.cycle.has_value());
  CHECK(abs(pc.cycle->multiplier) < 1);
  CHECK(pc.cycle->residual < newton_residual);
  CHECK_THROWS_AS(classify_parameter(Parameter(1, 0), 0), Error);
}

TEST_CASE("period-2 fixture through detect_cycle") {
  Parameter p(period_two);
  auto rec = iterate(p, ComplexValue(p.asymptotic_value()), 2000);
  auto c = detect_cycle(rec);
  REQUIRE(c.has_value());
  CHECK(c->period == 2);
  CHECK(abs(c->multiplier) < 0.1);
  CHECK(c->kind == CycleKind::Attracting);
  auto pts = cycle_points(p, *c);
  REQUIRE(pts.size() == 2);
  CHECK(abs(pts[0] - pts[1]) > 1e-3);
  // the cycle closes
  auto back = eval(p, eval(p, ComplexValue(pts[0])));
  CHECK(abs(back.z - pts[0]) < 1e-12);
}

TEST_CASE("multiplier does not depend on the starting point of the cycle") {
  Parameter p(period_two);
  auto pc = classify_parameter(p, 2000);
  REQUIRE(pc.cycle.has_value());
  auto pts = cycle_points(p, *pc.cycle);
  C a = multiplier(p, ComplexValue(pts[0]), 2), b = multiplier(p, ComplexValue(pts[1]), 2);
  CHECK(abs(a - b) < 1e-9 * std::max(1.0, abs(a)));
}

TEST_CASE("multiplier matches a finite difference of the iterate") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  int tested = 0;
  while (tested < 100) {
    Parameter p(C(u(rng), u(rng)));
    C z(u(rng), u(rng));
    int per = 1 + tested % 3;
    auto fp = [&](C w) {
      for (int j = 0; j < per; ++j) {
        auto r = eval_detailed(p, w);
        if (!r.finite()) return C(1e300);
        w = r.value;
      }
      return w;
    };
    C f0 = fp(z);
    if (abs(p.lambda) < 0.3 || abs(z) < 0.2 || abs(f0) > 20) continue;
    C m;
    try {
      m = multiplier(p, ComplexValue(z), per);
    } catch (const Error&) {
      continue;
    }
    if (abs(m) > 1e4 || abs(m) < 1e-3) continue;
    C h(1e-6);
    C fd = (fp(z + h) - fp(z - h)) / C(2e-6);
    if (abs(fp(z + h)) > 100 || abs(fp(z - h)) > 100) continue;
    ++tested;
    CHECK(abs(fd - m) <= 1e-5 * abs(m));
  }
}

TEST_CASE("multiplier on a pole throws PoleOnCycle") {
  Parameter p(0.85, 0);
  try {
    multiplier(p, pole<double>(0), 1);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PoleOnCycle);
  }
}

TEST_CASE("parameters whose singular value is a pole escape") {
  // lambda*i = i*sqrt(pi/2) is the pole in L_1
  Parameter p(C(std::sqrt(pi_v<double>() / 2), 0));
  auto pc = classify_parameter(p, 2000);
  CHECK(pc.verdict == Verdict::SingularEscape);
  CHECK(pc.singular_orbit.fate == Fate::HitPole);
  CHECK(pc.singular_orbit.steps_used == 1);
}

TEST_CASE("both singular orbits agree after one step") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 200; ++i) {
    Parameter p(C(u(rng), u(rng)));
    auto a = eval(p, ComplexValue(p.asymptotic_value())), b = eval(p, ComplexValue(-p.asymptotic_value()));
    CHECK(a == b);
  }
}

TEST_CASE("classification is symmetric under negation and conjugation") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 300; ++i) {
    C lam(u(rng), u(rng));
    auto a = classify_parameter(Parameter(lam), 1000);
    auto b = classify_parameter(Parameter(-lam), 1000);
    auto c = classify_parameter(Parameter(conj(lam)), 1000);
    CHECK(a.verdict == b.verdict);
    CHECK(a.period == b.period);
    CHECK(a.verdict == c.verdict);
    CHECK(a.period == c.period);
    CHECK(a.singular_orbit.steps_used == b.singular_orbit.steps_used);
    CHECK(a.singular_orbit.steps_used == c.singular_orbit.steps_used);
  }
}

TEST_CASE("an attracting verdict always carries exactly one attracting cycle") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-3, 3);
  int attracting = 0;
  for (int i = 0; i < 400; ++i) {
    auto pc = classify_parameter(Parameter(C(u(rng), u(rng))), 1000);
    if (pc.verdict != Verdict::AttractingCycle) continue;
    ++attracting;
    REQUIRE(pc.cycle.has_value());
    CHECK(pc.cycle->period == pc.period);
    CHECK(abs(pc.cycle->multiplier) < 1 - neutral_band);
    for (auto z : cycle_points(Parameter(pc.singular_orbit.param.lambda), *pc.cycle)) CHECK(abs(z) >= origin_capture);
  }
  CHECK(attracting > 0);
}
