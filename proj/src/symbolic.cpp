#include "tanz2/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace tanz2 {

std::string to_string(const SymbolPair& s) {
  std::ostringstream os;
  os << '(';
  if (s.at_infinity)
    os << "inf";
  else
    os << s.x;
  os << ',' << s.l << ')';
  return os.str();
}

std::string to_string(const Itinerary& t) {
  std::string out;
  for (const auto& s : t.symbols) out += to_string(s);
  if (!t.terminated) out += "...";
  return out;
}

Itinerary shift(const Itinerary& t) {
  if (t.symbols.size() < 2) throw Error(Errc::EmptyWord, "nothing left after the shift");
  Itinerary r;
  r.symbols.assign(t.symbols.begin() + 1, t.symbols.end());
  r.terminated = t.terminated;
  return r;
}

double distance_kappa(const Itinerary& s, const Itinerary& t, double kappa) {
  if (!(kappa > 1)) throw Error(Errc::BadKappa, "kappa must exceed 1");
  size_t common = std::min(s.size(), t.size());
  size_t longest = std::max(s.size(), t.size());
  size_t first = longest;
  for (size_t i = 0; i < common; ++i) {
    if (!(s.symbols[i] == t.symbols[i])) {
      first = i;
      break;
    }
  }
  if (first == longest && common < longest) first = common;
  if (first == longest) return 0.0;
  return std::pow(kappa, -static_cast<double>(first));
}

template <class R>
int quadrant_label(const Point<R>& z) {
  bool xp = z.z.re >= 0, yp = z.z.im >= 0;
  if (xp && yp) return 1;
  if (!xp && yp) return 2;
  if (!xp) return 3;
  return 4;
}

template <class R>
Itinerary itinerary_of(const Param<R>& p, const Point<R>& z, int depth) {
  Itinerary t;
  if (z.at_infinity) {
    t.symbols.push_back(SymbolPair::infinity());
    t.terminated = true;
    return t;
  }
  Point<R> cur = z;
  for (int step = 0; step < depth; ++step) {
    std::optional<int> k = region_of(cur);
    if (!k) throw Error(Errc::LeftSymbolDomain, "iterate in the uncoded central set", step);
    EvalResult<R> next = eval_detailed(p, cur.z);
    if (!next.finite()) {
      t.symbols.push_back({*k, 0, false});
      t.symbols.push_back(SymbolPair::infinity());
      t.terminated = true;
      return t;
    }
    t.symbols.push_back({*k, quadrant_label(cur), false});
    cur = Point<R>(next.value);
  }
  return t;
}

namespace {

// points within the boundary slack of an axis may carry either adjacent label
template <class R>
bool label_matches(const Point<R>& z, int l) {
  if (quadrant_label(z) == l) return true;
  using std::abs;
  R slack = R(boundary_slack) * abs(z.z);
  bool x_free = abs(z.z.re) <= slack, y_free = abs(z.z.im) <= slack;
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      if ((!x_free && sx == -1) || (!y_free && sy == -1)) continue;
      R x = x_free ? R(sx) : z.z.re, y = y_free ? R(sy) : z.z.im;
      if (quadrant_label(Point<R>(Complex<R>(x, y))) == l) return true;
    }
  return false;
}

void check_labels(const Itinerary& t, size_t count) {
  for (size_t i = 0; i < count; ++i) {
    const auto& s = t.symbols[i];
    if (s.at_infinity || s.l < 1 || s.l > 4) throw Error(Errc::InadmissibleWord, "bad symbol " + to_string(s));
  }
}

std::vector<int> reversed_regions(const Itinerary& t, size_t count) {
  std::vector<int> key;
  for (size_t i = count; i-- > 0;) key.push_back(t.symbols[i].x);
  return key;
}

template <class R>
Complex<R> side_probe(const Param<R>& p, int side) {
  return p.lambda * Complex<R>(R(0), R(side) / 2);
}

double max_distance(const std::vector<Complex<double>>& a, const std::vector<Complex<double>>& pool) {
  double m = 0;
  for (const auto& x : a)
    for (const auto& y : pool) m = std::max(m, abs(x - y));
  return m;
}

}  // namespace

template <class R>
CylinderPoint<R> point_from_itinerary(const Param<R>& p, const Itinerary& t, int depth) {
  if (t.symbols.empty()) throw Error(Errc::EmptyWord, "empty word");
  CylinderPoint<R> out;
  if (t.terminated) {
    size_t m = t.size();
    if (m == 1) {
      if (!t.symbols[0].at_infinity) throw Error(Errc::InadmissibleWord, "terminal word must end at infinity");
      out.point = Point<R>::infinity();
      return out;
    }
    if (!t.symbols[m - 1].at_infinity || t.symbols[m - 2].at_infinity || t.symbols[m - 2].l != 0)
      throw Error(Errc::InadmissibleWord, "terminal word must end with (k,0),(inf,0)");
    check_labels(t, m - 2);
    auto stages = composed_inverse_stages(p, reversed_regions(t, m - 1), Point<R>::infinity());
    for (size_t j = 0; j + 2 < m; ++j) {
      if (!label_matches(stages[m - 2 - j], t.symbols[j].l))
        throw Error(Errc::InadmissibleWord, "quadrant label disagrees at symbol " + std::to_string(j),
                    static_cast<int>(j));
    }
    out.point = stages.back();
    return out;
  }
  if (depth < 1) throw Error(Errc::BadArgument, "depth must be positive");
  size_t d = std::min(static_cast<size_t>(depth), t.size());
  check_labels(t, d);
  int side = image_side(t.symbols[d - 1].l);
  auto stages = composed_inverse_stages(p, reversed_regions(t, d), Point<R>(side_probe(p, side)));
  for (size_t j = 0; j < d; ++j) {
    if (!label_matches(stages[d - 1 - j], t.symbols[j].l))
      throw Error(Errc::InadmissibleWord, "quadrant label disagrees at symbol " + std::to_string(j),
                  static_cast<int>(j));
  }
  out.point = stages.back();
  Parameter pd = p.template cast<double>();
  Complex<double> c(out.point.z);
  auto samples = cylinder_samples(pd, t, static_cast<int>(d), ProbeSpec{});
  for (const auto& s : samples) out.radius = std::max(out.radius, abs(s - c));
  return out;
}

std::vector<Complex<double>> probe_contour(const Parameter& p, int side, const ProbeSpec& spec) {
  double lam = abs(p.lambda);
  double rz = spec.radius / lam;
  double rd = spec.disk / lam;
  double eta = spec.offset;
  double sd = side >= 0 ? 1.0 : -1.0;
  double pi = pi_v<double>();
  double l_arc = pi * rz, l_seg = 2 * rz, l_slit = 2 * std::max(0.0, rz - 1 - rd), l_circ = 2 * pi * rd;
  double total = l_arc + l_seg + l_slit + l_circ;
  auto count = [&](double len) { return std::max(2, static_cast<int>(std::lround(spec.points * len / total))); };

  std::vector<Complex<double>> zeta;
  int k = count(l_arc);
  for (int i = 0; i < k; ++i) {
    double th = pi * (i + 0.5) / k;
    zeta.emplace_back(rz * std::cos(th), sd * rz * std::sin(th));
  }
  k = count(l_seg);
  for (int i = 0; i < k; ++i) zeta.emplace_back(-rz + 2 * rz * (i + 0.5) / k, sd * eta);
  if (l_slit > 0) {
    k = count(l_slit) / 2;
    for (int i = 0; i < k; ++i) {
      double y = 1 + rd + (rz - 1 - rd) * (i + 0.5) / k;
      zeta.emplace_back(eta, sd * y);
      zeta.emplace_back(-eta, sd * y);
    }
  }
  if (rd < 1 && 1 + rd < rz) {
    k = count(l_circ);
    for (int i = 0; i < k; ++i) {
      double ph = 2 * pi * (i + 0.5) / k;
      zeta.emplace_back(rd * std::cos(ph), sd * (1 + rd * std::sin(ph)));
    }
  }
  std::vector<Complex<double>> out;
  out.reserve(zeta.size());
  for (const auto& q : zeta) out.push_back(p.lambda * q);
  return out;
}

std::vector<Complex<double>> cylinder_samples(const Parameter& p, const Itinerary& word, int depth,
                                              const ProbeSpec& spec) {
  size_t d = static_cast<size_t>(depth);
  if (depth < 1 || d > word.size()) throw Error(Errc::BadArgument, "depth outside the word");
  check_labels(word, d);
  auto key = reversed_regions(word, d);
  std::vector<Complex<double>> out;
  for (const auto& c : probe_contour(p, image_side(word.symbols[d - 1].l), spec)) {
    std::vector<ComplexValue> stages;
    try {
      stages = composed_inverse_stages(p, key, ComplexValue(c));
    } catch (const Error&) {
      continue;
    }
    bool ok = true;
    for (size_t j = 0; j < d && ok; ++j) ok = quadrant_label(stages[d - 1 - j]) == word.symbols[j].l;
    if (ok) out.push_back(stages.back().z);
  }
  return out;
}

Itinerary word_from_regions(const Parameter& p, const std::vector<int>& regions, int side) {
  std::vector<int> key(regions.rbegin(), regions.rend());
  auto stages = composed_inverse_stages(p, key, ComplexValue(side_probe(p, side)));
  Itinerary t;
  size_t d = regions.size();
  for (size_t j = 0; j < d; ++j) t.symbols.push_back({regions[j], quadrant_label(stages[d - 1 - j]), false});
  return t;
}

bool conjugacy_holds(const Param<quad>& p, const Point<quad>& z, int depth) {
  try {
    Itinerary a = itinerary_of(p, z, depth);
    Itinerary b = itinerary_of(p, eval(p, z), depth - 1);
    return b == shift(a);
  } catch (const Error&) {
    return false;
  }
}

CantorReport cantor_diagnostics(const Parameter& p, int sample_words, int depth, double kappa, std::uint64_t seed,
                                const ProbeSpec& probes) {
  if (!(kappa > 1)) throw Error(Errc::BadKappa, "kappa must exceed 1");
  if (depth < 1 || sample_words < 1) throw Error(Errc::BadArgument, "need at least one word of depth one");
  CantorReport rep;
  rep.lambda = p.lambda;
  rep.kappa = kappa;
  rep.depth = depth;
  rep.probes = probes;
  rep.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(-2, 2);
  std::set<std::pair<std::vector<int>, int>> seen;
  int attempts = 0;
  while (static_cast<int>(rep.words.size()) < sample_words && attempts < 100 * sample_words) {
    ++attempts;
    std::vector<int> regions(depth);
    for (auto& r : regions) r = pick(rng);
    int side = (rng() & 1) ? 1 : -1;
    if (!seen.insert({regions, side}).second) continue;
    WordReport wr;
    try {
      wr.word = word_from_regions(p, regions, side);
    } catch (const Error&) {
      continue;
    }
    rep.words.push_back(std::move(wr));
  }

  Param<quad> pq = p.cast<quad>();
  std::vector<std::vector<Complex<double>>> finals;
  for (auto& wr : rep.words) {
    std::vector<std::vector<Complex<double>>> sets(depth);
    for (int d = 1; d <= depth; ++d) sets[d - 1] = cylinder_samples(p, wr.word, d, probes);
    wr.diameters.assign(depth, 0.0);
    wr.raw_diameters.assign(depth, 0.0);
    std::vector<Complex<double>> pool;
    double running = 0;
    for (int d = depth; d >= 1; --d) {
      const auto& s = sets[d - 1];
      wr.raw_diameters[d - 1] = max_distance(s, s);
      pool.insert(pool.end(), s.begin(), s.end());
      running = std::max(running, max_distance(s, pool));
      wr.diameters[d - 1] = running;
    }
    wr.strictly_decreasing = true;
    for (int d = 1; d < depth; ++d)
      if (!(wr.diameters[d] < wr.diameters[d - 1])) wr.strictly_decreasing = false;
    if (wr.strictly_decreasing) ++rep.decreasing_words;
    rep.max_final_diameter = std::max(rep.max_final_diameter, wr.diameters[depth - 1]);
    finals.push_back(sets[depth - 1]);

    for (int k = 1; k <= std::min(depth, 5); ++k) {
      std::vector<int> key;
      for (int j = k; j-- > 0;) key.push_back(wr.word.symbols[j].x);
      ++rep.conjugacy_checked;
      try {
        Point<quad> z = composed_inverse(pq, key, Point<quad>::infinity());
        if (conjugacy_holds(pq, z, k + 2)) ++rep.conjugacy_passed;
      } catch (const Error&) {
      }
    }
  }

  rep.min_separation = std::numeric_limits<double>::infinity();
  rep.min_word_distance = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < rep.words.size(); ++i) {
    for (size_t j = i + 1; j < rep.words.size(); ++j) {
      rep.min_word_distance = std::min(rep.min_word_distance, distance_kappa(rep.words[i].word, rep.words[j].word, kappa));
      for (const auto& a : finals[i])
        for (const auto& b : finals[j]) rep.min_separation = std::min(rep.min_separation, abs(a - b));
    }
  }
  return rep;
}

template int quadrant_label(const Point<double>&);
template int quadrant_label(const Point<quad>&);
template Itinerary itinerary_of(const Param<double>&, const Point<double>&, int);
template Itinerary itinerary_of(const Param<quad>&, const Point<quad>&, int);
template CylinderPoint<double> point_from_itinerary(const Param<double>&, const Itinerary&, int);
template CylinderPoint<quad> point_from_itinerary(const Param<quad>&, const Itinerary&, int);

}  // namespace tanz2
