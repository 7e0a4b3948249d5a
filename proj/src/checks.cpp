#include "tanz2/checks.hpp"

#include "tanz2/io.hpp"
#include "tanz2/scan.hpp"
#include "tanz2/symbolic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace tanz2 {

namespace {

using C = Complex<double>;
using Clock = std::chrono::steady_clock;

double rel_err(C a, C b) {
  double scale = std::max(abs(a), abs(b));
  if (scale == 0) return 0;
  return abs(a - b) / scale;
}

C polar(double r, double th) { return {r * std::cos(th), r * std::sin(th)}; }

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }
  C annulus(double r0, double r1) { return polar(uniform(r0, r1), uniform(-pi_v<double>(), pi_v<double>())); }
};

// z_0..z_k under p, empty if a pole or a huge value shows up on the way
std::vector<C> finite_orbit(const Parameter& p, C z, int k, double bound = 1e8) {
  std::vector<C> out{z};
  for (int j = 0; j < k; ++j) {
    auto r = eval_detailed(p, out.back());
    if (!r.finite() || abs(r.value) > bound) return {};
    out.push_back(r.value);
  }
  return out;
}

// [f^k]'(z) as the product of f' along the orbit
C chain_derivative(const Parameter& p, const std::vector<C>& orbit, int k) {
  C d(1.0);
  for (int j = 0; j < k; ++j) d = d * derivative(p, ComplexValue(orbit[j]));
  return d;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << x;
  return os.str();
}

template <class Fn>
CheckResult timed(int id, const std::string& name, Fn fn) {
  CheckResult r;
  r.id = id;
  r.name = name;
  auto t0 = Clock::now();
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

CheckResult check_symmetry(const CheckOptions& o) {
  return timed(1, "symmetry identities", [&](CheckResult& r) {
    Sampler s(o.seed);
    const double tol = 1e-9;
    double worst[4] = {0, 0, 0, 0};
    int accepted = 0, tries = 0, even_bits = 0, one_sided = 0;
    while (accepted < o.samples && tries < 100 * o.samples) {
      ++tries;
      Parameter p(s.annulus(0.2, 2.0));
      C z = s.annulus(0.05, 2.0);
      auto base = finite_orbit(p, z, 5);
      if (base.empty()) continue;
      auto even = finite_orbit(p, -z, 5);
      auto cj = finite_orbit(Parameter(conj(p.lambda)), conj(z), 5);
      auto neg = finite_orbit(Parameter(-p.lambda), z, 5);
      auto rot = finite_orbit(Parameter(times_i(p.lambda)), z, 5);
      auto rotm = finite_orbit(Parameter(-times_i(p.lambda)), z, 5);
      ++accepted;
      if (even.empty() || cj.empty() || neg.empty() || rot.empty() || rotm.empty()) {
        ++one_sided;  // a pole on one side only
        continue;
      }
      if (even[1] == base[1]) ++even_bits;
      for (int k = 1; k <= 5; ++k) {
        worst[0] = std::max(worst[0], rel_err(even[k], base[k]));
        worst[1] = std::max(worst[1], rel_err(cj[k], conj(base[k])));
        worst[2] = std::max(worst[2], rel_err(neg[k], -base[k]));
        // +i then -i from the second iterate on; the -lambda*i family has the opposite signs
        C factor = k == 1 ? C(0, 1) : C(0, -1);
        worst[3] = std::max(worst[3], rel_err(rot[k], factor * base[k]));
        worst[3] = std::max(worst[3], rel_err(rotm[k], -(factor * base[k])));
      }
    }
    bool ok = accepted == o.samples && one_sided == 0 && even_bits == accepted;
    for (double w : worst) ok = ok && w < tol;
    r.passed = ok;
    r.detail = std::to_string(accepted) + " samples, k<=5; max rel err even " + fmt(worst[0]) + ", conj " +
               fmt(worst[1]) + ", negation " + fmt(worst[2]) + ", rotation " + fmt(worst[3]) +
               " (sign +i at k=1, -i for k>=2); one-step evenness bit-identical on " + std::to_string(even_bits);
  });
}

CheckResult check_derivative(const CheckOptions& o) {
  return timed(2, "derivative", [&](CheckResult& r) {
    Sampler s(o.seed + 1);
    const double h = 1e-6;
    double worst_fd = 0, worst_sym[4] = {0, 0, 0, 0};
    int fd_count = 0, sym_count = 0, tries = 0;
    while (fd_count < o.samples && tries < 100 * o.samples) {
      ++tries;
      Parameter p(s.annulus(0.3, 2.0));
      C z = s.annulus(0.2, 1.5);
      // stay well away from poles so the difference quotient is meaningful
      auto f0 = eval_detailed(p, z);
      if (!f0.finite() || abs(f0.value) > 4 * abs(p.lambda)) continue;
      C d = derivative(p, ComplexValue(z));
      for (C dir : {C(1.0), C(0.0, 1.0)}) {
        C step = h * dir;
        C fp = eval_detailed(p, z + step).value, fm = eval_detailed(p, z - step).value;
        C fd = (fp - fm) / (2.0 * step);
        worst_fd = std::max(worst_fd, rel_err(fd, d));
      }
      ++fd_count;
    }
    while (sym_count < o.samples && tries < 200 * o.samples) {
      ++tries;
      Parameter p(s.annulus(0.2, 2.0));
      C z = s.annulus(0.05, 2.0);
      auto base = finite_orbit(p, z, 5);
      auto even = finite_orbit(p, -z, 5);
      auto cj = finite_orbit(Parameter(conj(p.lambda)), conj(z), 5);
      auto neg = finite_orbit(Parameter(-p.lambda), z, 5);
      auto rot = finite_orbit(Parameter(times_i(p.lambda)), z, 5);
      if (base.empty() || even.empty() || cj.empty() || neg.empty() || rot.empty()) continue;
      ++sym_count;
      for (int k = 1; k <= 5; ++k) {
        C d = chain_derivative(p, base, k);
        // d/dz f^k(-z) = f^k'(z), i.e. f^k' is odd
        worst_sym[0] = std::max(worst_sym[0], rel_err(-chain_derivative(p, even, k), d));
        worst_sym[1] = std::max(worst_sym[1], rel_err(chain_derivative(Parameter(conj(p.lambda)), cj, k), conj(d)));
        worst_sym[2] = std::max(worst_sym[2], rel_err(chain_derivative(Parameter(-p.lambda), neg, k), -d));
        C factor = k == 1 ? C(0, 1) : C(0, -1);
        worst_sym[3] = std::max(worst_sym[3], rel_err(chain_derivative(Parameter(times_i(p.lambda)), rot, k), factor * d));
      }
    }
    bool ok = fd_count == o.samples && sym_count == o.samples && worst_fd < 1e-5;
    for (double w : worst_sym) ok = ok && w < 1e-9;
    r.passed = ok;
    r.detail = "central differences on " + std::to_string(fd_count) + " samples, max rel err " + fmt(worst_fd) +
               "; chain-rule identities on " + std::to_string(sym_count) + " orbits (k<=5): odd " +
               fmt(worst_sym[0]) + ", conj " + fmt(worst_sym[1]) + ", negation " + fmt(worst_sym[2]) +
               ", rotation " + fmt(worst_sym[3]);
  });
}

CheckResult check_inverse(const CheckOptions& o) {
  return timed(3, "inverse branches", [&](CheckResult& r) {
    Sampler s(o.seed + 2);
    double worst = 0;
    int samples = 0, branch_failures = 0, landing_failures = 0;
    while (samples < o.samples) {
      Parameter p(s.annulus(0.3, 2.5));
      C z = s.annulus(0.0, 4.0);
      if (abs(z - p.asymptotic_value()) < 1e-6 || abs(z + p.asymptotic_value()) < 1e-6) continue;
      ++samples;
      for (int n = -4; n <= 4; ++n) {
        try {
          ComplexValue w = inverse_branch(p, n, ComplexValue(z));
          auto back = eval_detailed(p, w.z);
          double e = back.finite() ? abs(back.value - z) / std::max(1.0, abs(z)) : 1.0;
          worst = std::max(worst, e);
          auto k = region_of(w);
          if (!k || *k != n || !region_contains(n, w)) ++landing_failures;
        } catch (const Error&) {
          ++branch_failures;
        }
      }
    }
    // every branch of infinity is the pole of that region
    int pole_failures = 0;
    for (int n = -4; n <= 4; ++n) {
      ComplexValue w = inverse_branch(Parameter(0.85, 0.0), n, ComplexValue::infinity());
      if (!(w == pole<double>(n)) || !eval(Parameter(0.85, 0.0), w).at_infinity) ++pole_failures;
    }

    // pre-poles: exhaustive over |n|<=2 at 0.85, plus random keys for random parameters
    int prepoles = 0, prepole_failures = 0;
    auto test_key = [&](const Param<quad>& pq, const std::vector<int>& key) {
      ++prepoles;
      try {
        Point<quad> z0 = composed_inverse(pq, key, Point<quad>::infinity());
        auto rec = iterate(pq, z0, static_cast<int>(key.size()) + 3);
        if (rec.fate != Fate::HitPole || rec.steps_used != static_cast<int>(key.size())) ++prepole_failures;
      } catch (const Error&) {
        ++prepole_failures;
      }
    };
    Param<quad> p85(quad(0.85), quad(0));
    std::vector<int> key;
    std::function<void(int)> rec = [&](int len) {
      if (len > 0) test_key(p85, key);
      if (len == 5) return;
      for (int n = -2; n <= 2; ++n) {
        key.push_back(n);
        rec(len + 1);
        key.pop_back();
      }
    };
    rec(0);
    for (int i = 0; i < 500; ++i) {
      Param<quad> pq = Parameter(s.annulus(0.3, 2.0)).cast<quad>();
      std::vector<int> k(s.integer(1, 5));
      for (auto& n : k) n = s.integer(-4, 4);
      test_key(pq, k);
    }

    r.passed = branch_failures == 0 && landing_failures == 0 && worst < round_trip_tol && pole_failures == 0 &&
               prepole_failures == 0;
    r.detail = std::to_string(samples) + " points x 9 branches: max round-trip err " + fmt(worst) + ", " +
               std::to_string(branch_failures) + " unavailable, " + std::to_string(landing_failures) +
               " landed outside L_n; " + std::to_string(prepoles) + " pre-poles (depth<=5), " +
               std::to_string(prepole_failures) + " missed the predicted pole step";
  });
}

CheckResult check_cantor_regime(const CheckOptions& o) {
  return timed(4, "Cantor regime at lambda=0.85", [&](CheckResult& r) {
    Parameter p(0.85, 0.0);
    ParameterClass pc = classify_parameter(p, default_budget);
    GridSpec spec = GridSpec::from_corners(-3, -3, 3, 3, o.basin_resolution, o.basin_resolution);
    ClassifiedGrid grid = scan_dynamical(p, spec, default_budget);
    BasinHeuristic h = immediate_basin_heuristic(p, grid);
    CantorReport rep = cantor_diagnostics(p, o.cantor_words, o.cantor_depth, 2.0, o.seed);
    bool words_ok = static_cast<int>(rep.words.size()) == o.cantor_words &&
                    rep.decreasing_words == o.cantor_words && rep.max_final_diameter < 1e-3;
    r.passed = pc.verdict == Verdict::OriginOnly && h.plus_connected && h.minus_connected && words_ok;
    r.detail = std::string("verdict ") + verdict_name(pc.verdict) + "; basin component " +
               std::to_string(h.component_size) + " px, +lambda*i " + (h.plus_connected ? "in" : "out") +
               ", -lambda*i " + (h.minus_connected ? "in" : "out") + "; " + std::to_string(rep.decreasing_words) +
               "/" + std::to_string(rep.words.size()) + " words strictly shrinking, max diameter at depth " +
               std::to_string(o.cantor_depth) + " " + fmt(rep.max_final_diameter);
  });
}

CheckResult check_conjugacy(const CheckOptions& o) {
  (void)o;
  return timed(5, "itinerary conjugacy", [&](CheckResult& r) {
    Param<quad> p(quad(0.85), quad(0));
    int total = 0, shift_ok = 0, coding_ok = 0;
    std::set<std::string> distinct;
    std::vector<int> key;
    std::function<void(int)> walk = [&](int len) {
      if (len > 0) {
        ++total;
        try {
          Point<quad> z = composed_inverse(p, key, Point<quad>::infinity());
          Itinerary it = itinerary_of(p, z, 8);
          Itinerary next = itinerary_of(p, eval(p, z), 8);
          if (next == shift(it)) ++shift_ok;
          // a depth-k pre-pole reads its key backwards, then (n,0),(inf,0)
          bool coded = it.terminated && it.size() == key.size() + 1 && it.symbols.back().at_infinity &&
                       it.symbols[key.size() - 1].l == 0;
          for (size_t j = 0; coded && j < key.size(); ++j) coded = it.symbols[j].x == key[key.size() - 1 - j];
          if (coded) ++coding_ok;
          distinct.insert(to_string(it));
        } catch (const Error&) {
        }
      }
      if (len == 5) return;
      for (int n = -2; n <= 2; ++n) {
        key.push_back(n);
        walk(len + 1);
        key.pop_back();
      }
    };
    walk(0);
    r.passed = total == 3905 && shift_ok == total && coding_ok == total && static_cast<int>(distinct.size()) == total;
    r.detail = std::to_string(total) + " pre-poles; shift agreement " + std::to_string(shift_ok) +
               ", itinerary equals reversed key " + std::to_string(coding_ok) + ", distinct itineraries " +
               std::to_string(distinct.size());
  });
}

namespace {

Itinerary random_word(Sampler& s) {
  Itinerary t;
  int len = s.integer(2, 8);
  t.terminated = s.integer(0, 3) == 0;
  int body = t.terminated ? std::max(1, len - 2) : len;
  for (int i = 0; i < body; ++i) t.symbols.push_back({s.integer(-1, 1), s.integer(1, 2), false});
  if (t.terminated) {
    t.symbols.push_back({s.integer(-1, 1), 0, false});
    t.symbols.push_back(SymbolPair::infinity());
  }
  return t;
}

}  // namespace

CheckResult check_metric(const CheckOptions& o) {
  return timed(6, "symbol metric", [&](CheckResult& r) {
    Sampler s(o.seed + 3);
    int sym_fail = 0, tri_fail = 0, lip_fail = 0, self_fail = 0;
    const double slack = 1e-12;
    for (double kappa : {1.5, 2.0, 4.0}) {
      for (int i = 0; i < o.metric_samples; ++i) {
        Itinerary a = random_word(s), b = random_word(s), c = random_word(s);
        double ab = distance_kappa(a, b, kappa);
        if (ab != distance_kappa(b, a, kappa)) ++sym_fail;
        if (distance_kappa(a, a, kappa) != 0) ++self_fail;
        double bc = distance_kappa(b, c, kappa), ac = distance_kappa(a, c, kappa);
        if (ac > (ab + bc) * (1 + slack)) ++tri_fail;
        if (distance_kappa(shift(a), shift(b), kappa) > kappa * ab * (1 + slack)) ++lip_fail;
      }
    }
    r.passed = sym_fail == 0 && tri_fail == 0 && lip_fail == 0 && self_fail == 0;
    r.detail = "kappa in {1.5,2,4}, " + std::to_string(o.metric_samples) +
               " triples/pairs each: symmetry failures " + std::to_string(sym_fail) + ", triangle " +
               std::to_string(tri_fail) + ", shift expansion " + std::to_string(lip_fail) + ", d(s,s)!=0 " +
               std::to_string(self_fail);
  });
}

CheckResult check_single_cycle(const CheckOptions& o) {
  return timed(7, "single extra cycle", [&](CheckResult& r) {
    int n = o.parameter_resolution;
    GridSpec spec = GridSpec::from_corners(-3, -3, 3, 3, n, n);
    int structural_fail = 0, attracting = 0;
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        C lam = spec.at(col, row);
        ParameterClass pc = classify_parameter(Parameter(lam), default_budget);
        bool ok;
        if (pc.verdict == Verdict::AttractingCycle) {
          ++attracting;
          ok = pc.cycle && pc.cycle->period == pc.period && pc.period >= 1 &&
               (pc.cycle->kind == CycleKind::Attracting || pc.cycle->kind == CycleKind::SuperAttracting);
        } else {
          ok = pc.period == 0 && (!pc.cycle || (pc.cycle->kind != CycleKind::Attracting &&
                                                pc.cycle->kind != CycleKind::SuperAttracting) ||
                                  pc.verdict == Verdict::OriginOnly);
        }
        if (!ok) ++structural_fail;
      }
    }
    ClassifiedGrid g = scan_parameter(spec, default_budget);
    int neg_fail = 0, conj_fail = 0;
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        const Cell& c = g.at(col, row);
        if (!(c == g.at(n - 1 - col, n - 1 - row))) ++neg_fail;
        if (!(c == g.at(col, n - 1 - row))) ++conj_fail;
      }
    }
    r.passed = structural_fail == 0 && neg_fail == 0 && conj_fail == 0;
    r.detail = std::to_string(n) + "x" + std::to_string(n) + " window [-3,3]^2: " + std::to_string(attracting) +
               " parameters with one extra attracting cycle, " + std::to_string(structural_fail) +
               " inconsistent reports; raster mismatches under -lambda " + std::to_string(neg_fail) +
               ", under conj " + std::to_string(conj_fail);
  });
}

CheckResult check_determinism(const CheckOptions& o) {
  (void)o;
  return timed(8, "worker-count determinism", [&](CheckResult& r) {
    unsigned hw = std::thread::hardware_concurrency();
    std::vector<int> counts{1, 4, static_cast<int>(std::max(1u, hw))};
    // extra counts so an uneven split is exercised even on small machines
    counts.push_back(3);
    counts.push_back(16);
    Palette pal = default_palette();
    auto render = [&](int workers) {
      ScanOptions opt;
      opt.workers = workers;
      std::vector<std::string> out;
      for (C lam : {C(0.85, 0.0), C(2.0, 0.1)}) {
        Parameter p(lam);
        auto g = scan_dynamical(p, GridSpec::from_corners(-3, -3, 3, 3, 160, 120), 800, opt);
        out.push_back(ppm_bytes(g, pal));
        out.push_back(grid_to_json(g).dump());
      }
      auto g = scan_parameter(GridSpec::from_corners(-3, -3, 3, 3, 72, 56), 800, opt);
      out.push_back(ppm_bytes(g, pal));
      out.push_back(grid_to_json(g).dump());
      return out;
    };
    auto reference = render(counts[0]);
    int mismatches = 0;
    for (size_t i = 1; i < counts.size(); ++i)
      if (render(counts[i]) != reference) ++mismatches;
    r.passed = mismatches == 0;
    std::string list;
    for (int c : counts) list += (list.empty() ? "" : ",") + std::to_string(c);
    r.detail = "dynplane (2 parameters) and paramplane, PPM and JSON, workers {" + list + "}: " +
               std::to_string(mismatches) + " differing runs";
  });
}

std::vector<CheckResult> run_all_checks(const CheckOptions& o) {
  std::vector<CheckResult> out;
  out.push_back(check_symmetry(o));
  if (out.back().passed && out.back().seconds >= 5) {
    out.back().passed = false;
    out.back().detail += "; over the 5 s budget";
  }
  out.push_back(check_derivative(o));
  out.push_back(check_inverse(o));
  out.push_back(check_cantor_regime(o));
  if (out.back().passed && out.back().seconds >= 60) {
    out.back().passed = false;
    out.back().detail += "; over the 60 s budget";
  }
  out.push_back(check_conjugacy(o));
  out.push_back(check_metric(o));
  out.push_back(check_single_cycle(o));
  out.push_back(check_determinism(o));
  return out;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << "  " << r.name << "  (" << std::fixed
     << std::setprecision(2) << r.seconds << " s)  " << r.detail;
  return os.str();
}

}  // namespace tanz2
