#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanz2/symbolic.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace tanz2;
using C = Complex<double>;

namespace {

Itinerary word(std::initializer_list<std::pair<int, int>> pairs, bool terminated = false) {
  Itinerary t;
  for (auto [x, l] : pairs) t.symbols.push_back({x, l, false});
  if (terminated) t.symbols.push_back(SymbolPair::infinity());
  t.terminated = terminated;
  return t;
}

const Param<quad> p85(quad(0.85), quad(0));

}  // namespace

TEST_CASE("shift examples") {
  CHECK(shift(word({{3, 1}, {5, 2}, {7, 4}})) == word({{5, 2}, {7, 4}}));
  auto t = shift(word({{4, 1}, {2, 0}}, true));
  CHECK(t == word({{2, 0}}, true));
  CHECK(t.terminated);
  CHECK(shift(shift(word({{1, 1}, {2, 2}, {3, 3}}))) == word({{3, 3}}));
  try {
    shift(word({{1, 1}}));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyWord);
  }
}

TEST_CASE("distance examples") {
  auto a = word({{1, 1}, {2, 2}, {3, 3}}), b = word({{1, 1}, {2, 2}, {4, 3}}), c = word({{0, 1}, {2, 2}, {3, 3}});
  CHECK(distance_kappa(a, a, 2) == 0);
  CHECK(distance_kappa(a, c, 2) == 1);
  CHECK(distance_kappa(a, b, 2) == 0.25);
  CHECK(distance_kappa(a, b, 4) == 0.0625);
  // a missing symbol is a disagreement at the first missing index
  CHECK(distance_kappa(a, word({{1, 1}, {2, 2}}), 2) == 0.25);
  // labels count as part of the symbol
  CHECK(distance_kappa(a, word({{1, 2}, {2, 2}, {3, 3}}), 2) == 1);
  for (double k : {1.0, 0.5, -2.0}) {
    try {
      distance_kappa(a, b, k);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadKappa);
    }
  }
}

TEST_CASE("metric axioms on random words") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> sym(-1, 1), lab(1, 2), len(2, 7);
  auto rnd = [&] {
    Itinerary t;
    int n = len(rng);
    for (int i = 0; i < n; ++i) t.symbols.push_back({sym(rng), lab(rng), false});
    return t;
  };
  for (double kappa : {1.5, 2.0, 4.0}) {
    for (int i = 0; i < 3000; ++i) {
      auto s = rnd(), t = rnd(), u = rnd();
      double st = distance_kappa(s, t, kappa);
      CHECK(st == distance_kappa(t, s, kappa));
      CHECK(distance_kappa(s, u, kappa) <= st + distance_kappa(t, u, kappa));
      CHECK((st == 0) == (s == t));
      CHECK(distance_kappa(shift(s), shift(t), kappa) <= kappa * st);
    }
  }
}

TEST_CASE("quadrant labels") {
  CHECK(quadrant_label(ComplexValue(C(1, 1))) == 1);
  CHECK(quadrant_label(ComplexValue(C(-1, 1))) == 2);
  CHECK(quadrant_label(ComplexValue(C(-1, -1))) == 3);
  CHECK(quadrant_label(ComplexValue(C(1, -1))) == 4);
  CHECK(quadrant_label(ComplexValue(C(0, 0))) == 1);
  CHECK(quadrant_label(ComplexValue(C(0, -1))) == 4);
  CHECK(quadrant_label(ComplexValue(C(-1, 0))) == 2);
}

TEST_CASE("itinerary of a pole and of infinity") {
  Parameter p(0.85, 0);
  for (int n = -3; n <= 3; ++n) {
    auto t = itinerary_of(p, pole<double>(n), 10);
    CHECK(t.terminated);
    REQUIRE(t.size() == 2);
    CHECK(t.symbols[0] == SymbolPair{n, 0, false});
    CHECK(t.symbols[1].at_infinity);
  }
  auto inf = itinerary_of(p, ComplexValue::infinity(), 4);
  CHECK(inf.terminated);
  CHECK(inf.size() == 1);
}

TEST_CASE("itinerary of a depth-2 pre-pole") {
  auto z = composed_inverse(p85, {1, -2}, Point<quad>::infinity());
  auto t = itinerary_of(p85, z, 10);
  REQUIRE(t.size() == 3);
  CHECK(t.terminated);
  // forward order reads the key backwards: z lies in L_{-2}, its image is the pole in L_1
  CHECK(t.symbols[0].x == -2);
  CHECK(t.symbols[1] == SymbolPair{1, 0, false});
  CHECK(t.symbols[2].at_infinity);
}

TEST_CASE("itinerary of the origin leaves the coded set") {
  try {
    itinerary_of(Parameter(0.85, 0), ComplexValue(C(0.1, 0.1)), 3);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LeftSymbolDomain);
    CHECK(e.index() == 0);
  }
}

TEST_CASE("conjugacy on sampled pre-poles up to depth 6") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> pick(-3, 3), len(1, 6);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> key(len(rng));
    for (auto& n : key) n = pick(rng);
    auto z = composed_inverse(p85, key, Point<quad>::infinity());
    CHECK(conjugacy_holds(p85, z, 8));
  }
}

TEST_CASE("distinct pre-poles have distinct itineraries") {
  std::set<std::string> seen;
  int count = 0;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        auto z = composed_inverse(p85, {a, b, c}, Point<quad>::infinity());
        seen.insert(to_string(itinerary_of(p85, z, 6)));
        ++count;
      }
  CHECK(static_cast<int>(seen.size()) == count);
}

TEST_CASE("terminal words map back to pre-poles") {
  Parameter p(0.85, 0);
  for (int n = -3; n <= 3; ++n) {
    auto cp = point_from_itinerary(p, word({{n, 0}}, true), 1);
    CHECK(cp.point == pole<double>(n));
    CHECK(cp.radius == 0);
  }
  CHECK(point_from_itinerary(p, word({}, true), 1).point.at_infinity);
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> pick(-2, 2), len(1, 5);
  for (int i = 0; i < 60; ++i) {
    std::vector<int> key(len(rng));
    for (auto& n : key) n = pick(rng);
    auto z = composed_inverse(p85, key, Point<quad>::infinity());
    auto t = itinerary_of(p85, z, 10);
    auto back = point_from_itinerary(p85, t, 10);
    CHECK(back.point == z);
    CHECK(itinerary_of(p85, back.point, 10) == t);
  }
}

TEST_CASE("inadmissible words are rejected") {
  Parameter p(0.85, 0);
  // label 0 outside the terminal tail
  CHECK_THROWS_AS(point_from_itinerary(p, word({{1, 0}, {2, 1}}), 2), Error);
  // terminal word without the (k,0) pair
  CHECK_THROWS_AS(point_from_itinerary(p, word({{1, 2}}, true), 1), Error);
  CHECK_THROWS_AS(point_from_itinerary(p, Itinerary{}, 1), Error);
  // label that disagrees with the quadrant of the pre-pole
  auto z = composed_inverse(p85, {0, 2}, Point<quad>::infinity());
  auto t = itinerary_of(p85, z, 5);
  t.symbols[0].l = t.symbols[0].l % 4 + 1;
  try {
    point_from_itinerary(p85, t, 5);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InadmissibleWord);
  }
}

TEST_CASE("unterminated words: round trip and contraction") {
  Parameter p(0.85, 0);
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> pick(-2, 2);
  for (int i = 0; i < 40; ++i) {
    std::vector<int> regions(5);
    for (auto& r : regions) r = pick(rng);
    auto t = word_from_regions(p, regions, (i % 2) ? 1 : -1);
    auto cp = point_from_itinerary(p, t, 5);
    CHECK(itinerary_of(p, cp.point, 5) == t);
    CHECK(cp.radius > 0);
  }
  std::vector<int> regions{1, -2, 0, 2, -1, 1, 0, -2, 2, 1, -1, 0};
  auto t = word_from_regions(p, regions, 1);
  auto a = point_from_itinerary(p, t, 4).point, b = point_from_itinerary(p, t, 8).point,
       c = point_from_itinerary(p, t, 12).point;
  CHECK(abs(c.z - b.z) < abs(b.z - a.z));
  CHECK(point_from_itinerary(p, t, 12).radius < point_from_itinerary(p, t, 4).radius);
}

TEST_CASE("probe contour stays in the half disk and off the excluded disk") {
  Parameter p(0.85, 0.2);
  for (int side : {1, -1}) {
    auto pts = probe_contour(p, side, ProbeSpec{});
    CHECK(pts.size() >= 100);
    for (C z : pts) {
      C q = z / p.lambda;
      CHECK(side * q.im > 0);
      CHECK(abs(z) <= 3.0 + 1e-12);
      CHECK(abs(z - C(0, side) * p.lambda) >= 0.1 - 1e-12);
    }
  }
}

TEST_CASE("cantor diagnostics at 0.85") {
  Parameter p(0.85, 0);
  auto rep = cantor_diagnostics(p, 20, 12, 2.0, 5);
  CHECK(rep.words.size() == 20);
  CHECK(rep.decreasing_words == 20);
  CHECK(rep.max_final_diameter < 1e-4);
  CHECK(rep.conjugacy_checked > 0);
  CHECK(rep.conjugacy_passed == rep.conjugacy_checked);
  CHECK(rep.min_separation > 0);
  CHECK(rep.min_word_distance > 0);
  for (const auto& w : rep.words) {
    CHECK(w.diameters.size() == 12);
    CHECK(w.raw_diameters.size() == 12);
    for (size_t d = 0; d < 12; ++d) CHECK(w.raw_diameters[d] <= w.diameters[d]);
  }
  CHECK_THROWS_AS(cantor_diagnostics(p, 2, 3, 1.0), Error);
  // same seed, same report
  auto again = cantor_diagnostics(p, 20, 12, 2.0, 5);
  CHECK(again.max_final_diameter == rep.max_final_diameter);
  CHECK(again.words[7].word == rep.words[7].word);
}
