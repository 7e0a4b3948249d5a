#include "tanz2/map.hpp"

#include <cmath>

namespace tanz2 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::PoleAt: return "PoleAt";
    case Errc::AsymptoticValueExcluded: return "AsymptoticValueExcluded";
    case Errc::BranchUnavailable: return "BranchUnavailable";
    case Errc::PoleOnCycle: return "PoleOnCycle";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::BadKappa: return "BadKappa";
    case Errc::LeftSymbolDomain: return "LeftSymbolDomain";
    case Errc::InadmissibleWord: return "InadmissibleWord";
    case Errc::SeedUndetermined: return "SeedUndetermined";
    case Errc::IoFailure: return "IoFailure";
    case Errc::BadParameter: return "BadParameter";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

const char* fate_name(Fate f) {
  switch (f) {
    case Fate::ConvergedToPoint: return "ConvergedToPoint";
    case Fate::HitPole: return "HitPole";
    case Fate::Overflowed: return "Overflowed";
    case Fate::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

namespace {

// pieces of tan(w) for w = z*z = u + iv, split so that every symmetry of the
// family (z -> -z, conjugation, z -> iz) is reproduced bit for bit
template <class R>
struct TanParts {
  R s, c, t, h;  // sin u, cos u, tanh v, sech^2 v
  R cos2;        // |cos w|^2
};

template <class R>
TanParts<R> tan_parts(const Complex<R>& z) {
  using std::abs;
  using std::copysign;
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::tanh;
  R u = (z.re - z.im) * (z.re + z.im);
  R v = (z.re + z.re) * z.im;
  R av = abs(v);
  TanParts<R> tp;
  tp.s = sin(u);
  tp.c = cos(u);
  tp.t = copysign(tanh(av), v);
  R ch = cosh(av);
  tp.h = 1 / (ch * ch);
  R sh2 = tp.t * tp.t * ch * ch;
  tp.cos2 = tp.c * tp.c + sh2;
  return tp;
}

}  // namespace

template <class R>
EvalResult<R> eval_detailed(const Param<R>& p, const Complex<R>& z) {
  using std::isfinite;
  TanParts<R> tp = tan_parts(z);
  EvalResult<R> r;
  R eps = R(pole_epsilon);
  if (tp.cos2 < eps * eps) {
    r.status = EvalStatus::Pole;
    return r;
  }
  R d = tp.c * tp.c * tp.h + tp.t * tp.t;
  Complex<R> tn(tp.s * tp.c * tp.h / d, tp.t / d);
  r.value = p.lambda * tn;
  R lim = R(overflow_threshold);
  if (!isfinite(r.value.re) || !isfinite(r.value.im) || norm(r.value) > lim * lim) {
    r.status = EvalStatus::Overflow;
    r.value = {};
  }
  return r;
}

template <class R>
Point<R> eval(const Param<R>& p, const Point<R>& z) {
  if (z.at_infinity) return Point<R>::infinity();
  EvalResult<R> r = eval_detailed(p, z.z);
  if (!r.finite()) return Point<R>::infinity();
  return Point<R>(r.value);
}

template <class R>
Complex<R> derivative(const Param<R>& p, const Point<R>& z) {
  if (z.at_infinity) throw Error(Errc::PoleAt, "derivative at infinity");
  TanParts<R> tp = tan_parts(z.z);
  R eps = R(pole_epsilon);
  if (tp.cos2 < eps * eps) throw Error(Errc::PoleAt, "derivative at a pole");
  // cos w = cosh v * (c - i s t)
  Complex<R> q(tp.c, -tp.s * tp.t);
  Complex<R> num = (R(2) * p.lambda) * z.z;
  return (tp.h * num) / (q * q);
}

template <class R>
OrbitRecord<R> iterate(const Param<R>& p, const Point<R>& z0, int max_steps, double convergence_tol) {
  if (max_steps < 1) throw Error(Errc::BadArgument, "max_steps must be at least 1");
  OrbitRecord<R> rec{p, {z0}, Fate::BudgetExhausted, 0};
  if (z0.at_infinity) {
    rec.fate = Fate::HitPole;
    return rec;
  }
  R tol = R(convergence_tol);
  int quiet = 0;
  Complex<R> z = z0.z;
  for (int step = 1; step <= max_steps; ++step) {
    EvalResult<R> r = eval_detailed(p, z);
    rec.steps_used = step;
    if (!r.finite()) {
      rec.points.push_back(Point<R>::infinity());
      rec.fate = r.status == EvalStatus::Pole ? Fate::HitPole : Fate::Overflowed;
      return rec;
    }
    rec.points.push_back(Point<R>(r.value));
    quiet = abs(r.value - z) < tol ? quiet + 1 : 0;
    z = r.value;
    if (quiet >= 3) {
      rec.fate = Fate::ConvergedToPoint;
      return rec;
    }
  }
  rec.fate = Fate::BudgetExhausted;
  return rec;
}

template EvalResult<double> eval_detailed(const Param<double>&, const Complex<double>&);
template EvalResult<quad> eval_detailed(const Param<quad>&, const Complex<quad>&);
template Point<double> eval(const Param<double>&, const Point<double>&);
template Point<quad> eval(const Param<quad>&, const Point<quad>&);
template Complex<double> derivative(const Param<double>&, const Point<double>&);
template Complex<quad> derivative(const Param<quad>&, const Point<quad>&);
template OrbitRecord<double> iterate(const Param<double>&, const Point<double>&, int, double);
template OrbitRecord<quad> iterate(const Param<quad>&, const Point<quad>&, int, double);

}  // namespace tanz2
