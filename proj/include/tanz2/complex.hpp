#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <cmath>

namespace tanz2 {

using quad = boost::multiprecision::float128;

template <class R>
inline R pi_v() {
  return boost::math::constants::pi<R>();
}

template <class R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(R r, R i = R(0)) : re(r), im(i) {}

  template <class S>
  explicit Complex(const Complex<S>& o) : re(static_cast<R>(o.re)), im(static_cast<R>(o.im)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const R& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

template <class R>
inline Complex<R> conj(const Complex<R>& a) {
  return {a.re, -a.im};
}

// multiplication by i, kept exact
template <class R>
inline Complex<R> times_i(const Complex<R>& a) {
  return {-a.im, a.re};
}

template <class R>
inline R norm(const Complex<R>& a) {
  return a.re * a.re + a.im * a.im;
}

template <class R>
inline R abs(const Complex<R>& a) {
  using std::hypot;
  return hypot(a.re, a.im);
}

template <class R>
inline Complex<R> sqrt(const Complex<R>& a) {
  using std::abs;
  using std::copysign;
  using std::sqrt;
  if (a.re == 0 && a.im == 0) return {R(0), a.im};
  R t = sqrt((abs(a) + abs(a.re)) / 2);
  if (a.re >= 0) return {t, a.im / (2 * t)};
  return {abs(a.im) / (2 * t), copysign(t, a.im)};
}

// a point of the extended plane
template <class R>
struct Point {
  Complex<R> z;
  bool at_infinity = false;

  Point() = default;
  Point(Complex<R> v) : z(v) {}
  Point(R re, R im) : z(re, im) {}

  static Point infinity() {
    Point p;
    p.at_infinity = true;
    return p;
  }
  R re() const { return z.re; }
  R im() const { return z.im; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return a.z == b.z;
  }
};

using ComplexValue = Point<double>;

template <class S, class R>
inline Point<S> point_cast(const Point<R>& p) {
  if (p.at_infinity) return Point<S>::infinity();
  return Point<S>(Complex<S>(p.z));
}

}  // namespace tanz2
