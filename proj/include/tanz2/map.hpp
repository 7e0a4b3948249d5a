#pragma once

#include "tanz2/complex.hpp"
#include "tanz2/error.hpp"

#include <vector>

namespace tanz2 {

inline constexpr double pole_epsilon = 1e-12;
inline constexpr double overflow_threshold = 1e15;
inline constexpr double default_convergence_tol = 1e-10;

template <class R>
struct Param {
  Complex<R> lambda;

  explicit Param(Complex<R> l) : lambda(l) {
    if (l.re == 0 && l.im == 0) throw Error(Errc::BadParameter, "lambda must be nonzero");
  }
  Param(R re, R im) : Param(Complex<R>(re, im)) {}

  // lambda*i; the other asymptotic value is its negative
  Complex<R> asymptotic_value() const { return times_i(lambda); }
  Complex<R> critical_value() const { return {}; }

  template <class S>
  Param<S> cast() const {
    return Param<S>(Complex<S>(lambda));
  }
};

using Parameter = Param<double>;

enum class EvalStatus { Finite, Pole, Overflow };

template <class R>
struct EvalResult {
  Complex<R> value;
  EvalStatus status = EvalStatus::Finite;
  bool finite() const { return status == EvalStatus::Finite; }
};

template <class R>
EvalResult<R> eval_detailed(const Param<R>& p, const Complex<R>& z);

template <class R>
Point<R> eval(const Param<R>& p, const Point<R>& z);

template <class R>
Complex<R> derivative(const Param<R>& p, const Point<R>& z);

enum class Fate { ConvergedToPoint, HitPole, Overflowed, BudgetExhausted };

const char* fate_name(Fate f);

template <class R>
struct OrbitRecord {
  Param<R> param;
  std::vector<Point<R>> points;
  Fate fate = Fate::BudgetExhausted;
  int steps_used = 0;

  // step of HitPole/Overflowed
  int fate_step() const { return steps_used; }
};

template <class R>
OrbitRecord<R> iterate(const Param<R>& p, const Point<R>& z0, int max_steps,
                       double convergence_tol = default_convergence_tol);

}  // namespace tanz2
