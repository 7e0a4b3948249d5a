#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanz2/lattice.hpp"
#include "tanz2/map.hpp"

#include <cmath>
#include <random>

using namespace tanz2;
using C = Complex<double>;

namespace {
const double pi = pi_v<double>();
}

TEST_CASE("zero indexing") {
  CHECK(zero<double>(0).z == C(0, 0));
  CHECK(zero<double>(2).re() == doctest::Approx(1.7724539).epsilon(1e-7));
  CHECK(zero<double>(2).im() == 0);
  CHECK(zero<double>(1).re() == 0);
  CHECK(zero<double>(1).im() == doctest::Approx(std::sqrt(pi)));
  CHECK(zero<double>(-2).re() == doctest::Approx(-std::sqrt(pi)));
  CHECK(zero<double>(-1).im() == doctest::Approx(-std::sqrt(pi)));
  CHECK(zero<double>(4).re() == doctest::Approx(std::sqrt(2 * pi)));
  CHECK(zero<double>(3).im() == doctest::Approx(std::sqrt(2 * pi)));
}

TEST_CASE("pole indexing") {
  CHECK(pole<double>(0).re() == doctest::Approx(1.2533141).epsilon(1e-7));
  CHECK(pole<double>(1).z == C(0, std::sqrt(pi / 2)));
  CHECK(pole<double>(-1).z == C(0, -std::sqrt(pi / 2)));
  CHECK(pole<double>(-2).z == C(-std::sqrt(pi / 2), 0));
  CHECK(pole<double>(2).re() == doctest::Approx(std::sqrt(1.5 * pi)));
  CHECK(pole<double>(-4).re() == doctest::Approx(-std::sqrt(1.5 * pi)));
}

TEST_CASE("every pole is a pole of the map") {
  for (C lam : {C(0.85), C(-1.1, 0.4)})
    for (int n = -6; n <= 6; ++n) CHECK(eval(Parameter(lam), pole<double>(n)).at_infinity);
}

TEST_CASE("zeros map to zero") {
  for (int n = -10; n <= 10; ++n) {
    auto w = eval(Parameter(0.85, 0), zero<double>(n));
    REQUIRE_FALSE(w.at_infinity);
    CHECK(abs(w.z) < 1e-12);
  }
}

TEST_CASE("region membership examples") {
  CHECK(region_contains(0, pole<double>(0)));
  CHECK(region_contains(0, ComplexValue(C(std::sqrt(pi)))));
  CHECK_FALSE(region_contains(2, ComplexValue(C(std::sqrt(pi)))));
  CHECK_FALSE(region_contains(0, ComplexValue(-pole<double>(0).z)));
  CHECK(region_contains(-2, ComplexValue(-pole<double>(0).z)));
  CHECK(region_of(pole<double>(3)) == 3);
  CHECK_FALSE(region_of(ComplexValue(C(0.0))).has_value());
  CHECK_FALSE(region_of(ComplexValue::infinity()).has_value());
}

TEST_CASE("region descriptors follow the parity rule") {
  CHECK_FALSE(region(0).imaginary_family);
  CHECK(region(1).imaginary_family);
  CHECK(region(-1).half_plane == HalfPlane::ImNeg);
  CHECK(region(-2).half_plane == HalfPlane::ReNeg);
  CHECK(region(-2).k == 0);
  CHECK(region(4).k == 2);
  CHECK(region(5).k == 2);
  CHECK(region(-5).k == 2);
  CHECK(region(-6).k == 2);
}

TEST_CASE("poles sit in their own region, the next pole does not") {
  for (int n = -10; n <= 10; ++n) {
    CHECK(region_contains(n, pole<double>(n)));
    CHECK_FALSE(region_contains(n, pole<double>(n + 2)));
    CHECK(region_of(pole<double>(n)) == n);
  }
}

TEST_CASE("region_of agrees with brute force and regions are disjoint") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-12, 12);
  for (int i = 0; i < 5000; ++i) {
    ComplexValue z(C(u(rng), u(rng)));
    int hits = 0, found = 0;
    for (int n = -200; n <= 200; ++n)
      if (region_contains(n, z)) {
        ++hits;
        found = n;
      }
    CHECK(hits <= 1);
    auto k = region_of(z);
    if (hits == 1) {
      REQUIRE(k.has_value());
      CHECK(*k == found);
    } else {
      CHECK_FALSE(k.has_value());
    }
  }
}

TEST_CASE("axis points go to the positive half plane") {
  // z purely imaginary with Re(z^2) in an imaginary strip
  ComplexValue z(C(0.0, 2.0));
  auto k = region_of(z);
  REQUIRE(k.has_value());
  CHECK(*k % 2 != 0);
  CHECK(*k > 0);
  ComplexValue w(C(2.0, 0.0));
  REQUIRE(region_of(w).has_value());
  CHECK(*region_of(w) >= 0);
}

TEST_CASE("the map is one to one on each region") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-4, 4);
  Parameter p(0.85, 0);
  int pairs = 0;
  while (pairs < 1000) {
    ComplexValue a(C(u(rng), u(rng))), b(C(u(rng), u(rng)));
    auto ka = region_of(a), kb = region_of(b);
    if (!ka || !kb || *ka != *kb || std::abs(*ka) > 4) continue;
    // away from the real axis of z^2 the map saturates at the asymptotic values
    // and distinct points become indistinguishable in double precision
    if (std::abs((a.z * a.z).im) > 2 || std::abs((b.z * b.z).im) > 2 || abs(a.z - b.z) < 0.05) continue;
    auto fa = eval(p, a), fb = eval(p, b);
    if (fa.at_infinity || fb.at_infinity) continue;
    ++pairs;
    CHECK(abs(fa.z - fb.z) > 1e-8);
  }
}

TEST_CASE("lattice in quad precision matches double") {
  for (int n = -6; n <= 6; ++n) {
    auto q = pole<quad>(n);
    auto d = pole<double>(n);
    CHECK(static_cast<double>(q.z.re) == doctest::Approx(d.z.re).epsilon(1e-15));
    CHECK(static_cast<double>(q.z.im) == doctest::Approx(d.z.im).epsilon(1e-15));
    CHECK(region_of(q) == n);
  }
}
