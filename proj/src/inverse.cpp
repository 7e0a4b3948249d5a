#include "tanz2/inverse.hpp"

#include <cmath>
#include <string>

namespace tanz2 {

template <class R>
Complex<R> arctan_log(const Param<R>& p, const Complex<R>& z) {
  using std::atan2;
  using std::log1p;
  R a = p.lambda.re, b = p.lambda.im;
  R x = z.re, y = z.im;
  R den = (a + y) * (a + y) + (b - x) * (b - x);
  R re = atan2(2 * (a * x + b * y), (a - x) * (a + x) + (b - y) * (b + y)) / 2;
  R im = -log1p(4 * (b * x - a * y) / den) / 4;
  return {re, im};
}

template <class R>
Complex<R> arctan_log_direct(const Param<R>& p, const Complex<R>& z) {
  using std::atan2;
  using std::log;
  Complex<R> iz = times_i(z);
  Complex<R> r = (p.lambda + iz) / (p.lambda - iz);
  // (1/2i) (log|r| + i arg r)
  return {atan2(r.im, r.re) / 2, -log(abs(r)) / 2};
}

template <class R>
Point<R> inverse_branch(const Param<R>& p, int n, const Point<R>& z) {
  using std::abs;
  using std::round;
  if (z.at_infinity) return pole<R>(n);
  Complex<R> av = p.asymptotic_value();
  R excl = R(asymptotic_exclusion);
  if (abs(z.z - av) < excl || abs(z.z + av) < excl)
    throw Error(Errc::AsymptoticValueExcluded, "preimage of an asymptotic value");

  Region reg = region(n);
  Complex<R> a0 = arctan_log(p, z.z);
  R pi = pi_v<R>();
  // centre of the target strip for Re(w^2)
  R centre = (R(reg.k) + 1) * pi;
  if (reg.imaginary_family) centre = -centre;
  int j0 = static_cast<int>(round((centre - a0.re) / pi));
  R tol = R(round_trip_tol);
  R scale = abs(z.z) > 1 ? abs(z.z) : R(1);
  for (int dj : {0, -1, 1, -2, 2}) {
    Complex<R> a(a0.re + R(j0 + dj) * pi, a0.im);
    Complex<R> w = sqrt(a);
    bool flip = false;
    switch (reg.half_plane) {
      case HalfPlane::RePos: flip = w.re < 0; break;
      case HalfPlane::ReNeg: flip = w.re >= 0; break;
      case HalfPlane::ImPos: flip = w.im < 0; break;
      case HalfPlane::ImNeg: flip = w.im >= 0; break;
    }
    if (flip) w = -w;
    Point<R> cand(w);
    if (!region_contains(n, cand)) continue;
    EvalResult<R> back = eval_detailed(p, w);
    if (!back.finite()) continue;
    if (abs(back.value - z.z) <= tol * scale) return cand;
  }
  throw Error(Errc::BranchUnavailable, "no preimage in L_" + std::to_string(n));
}

template <class R>
std::vector<Point<R>> composed_inverse_stages(const Param<R>& p, const std::vector<int>& key, const Point<R>& z) {
  if (key.empty()) throw Error(Errc::BadArgument, "empty itinerary key");
  std::vector<Point<R>> stages;
  stages.reserve(key.size());
  Point<R> w = z;
  for (size_t i = 0; i < key.size(); ++i) {
    try {
      w = inverse_branch(p, key[i], w);
    } catch (const Error& e) {
      throw Error(e.code(), "stage " + std::to_string(i + 1) + ": " + e.what(), static_cast<int>(i + 1));
    }
    stages.push_back(w);
  }
  return stages;
}

template <class R>
Point<R> composed_inverse(const Param<R>& p, const std::vector<int>& key, const Point<R>& z) {
  return composed_inverse_stages(p, key, z).back();
}

template Complex<double> arctan_log(const Param<double>&, const Complex<double>&);
template Complex<quad> arctan_log(const Param<quad>&, const Complex<quad>&);
template Complex<double> arctan_log_direct(const Param<double>&, const Complex<double>&);
template Complex<quad> arctan_log_direct(const Param<quad>&, const Complex<quad>&);
template Point<double> inverse_branch(const Param<double>&, int, const Point<double>&);
template Point<quad> inverse_branch(const Param<quad>&, int, const Point<quad>&);
template Point<double> composed_inverse(const Param<double>&, const std::vector<int>&, const Point<double>&);
template Point<quad> composed_inverse(const Param<quad>&, const std::vector<int>&, const Point<quad>&);
template std::vector<Point<double>> composed_inverse_stages(const Param<double>&, const std::vector<int>&,
                                                            const Point<double>&);
template std::vector<Point<quad>> composed_inverse_stages(const Param<quad>&, const std::vector<int>&,
                                                          const Point<quad>&);

}  // namespace tanz2
