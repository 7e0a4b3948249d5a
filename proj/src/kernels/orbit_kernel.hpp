#pragma once

// Shared body of the orbit kernel. L is a lane pack providing arithmetic,
// comparisons returning masks, select, floor and an exact 2^n builder.
// Every lane runs the same sequence of IEEE operations, and no fused
// multiply-add is used, so all instantiations agree bit for bit.

#include "tanz2/kernels.hpp"

namespace tanz2::kern {

// cephes sin.c
inline constexpr double kFourOverPi = 1.27323954473516268615;
inline constexpr double kDP1 = 7.85398125648498535156e-1;
inline constexpr double kDP2 = 3.77489470793079817668e-8;
inline constexpr double kDP3 = 2.69515142907905952645e-15;
inline constexpr double kSin[6] = {1.58962301576546568060e-10, -2.50507477628578072866e-8,
                                   2.75573136213857245213e-6,  -1.98412698295895385996e-4,
                                   8.33333333332211858878e-3,  -1.66666666666666307295e-1};
inline constexpr double kCos[6] = {-1.13585365213876817300e-11, 2.08757008419747316778e-9,
                                   -2.75573141792967388112e-7,  2.48015872888517045348e-5,
                                   -1.38888888888730564116e-3,  4.16666666666665929218e-2};
// cephes exp.c
inline constexpr double kLog2e = 1.4426950408889634073599;
inline constexpr double kC1 = 6.93145751953125e-1;
inline constexpr double kC2 = 1.42860682030941723212e-6;
inline constexpr double kP[3] = {1.26177193074810590878e-4, 3.02994407707441961300e-2, 9.99999999999999999910e-1};
inline constexpr double kQ[4] = {3.00198505138664455042e-6, 2.52448340349684104192e-3, 2.27265548208155028766e-1,
                                 2.00000000000000000009e0};

inline constexpr double kMaxU = 1e9;   // beyond this the reduction is not trusted
inline constexpr double kMaxV = 350;   // exp(-2v) stays normal

template <class L, size_t N>
inline L polevl(L x, const double (&c)[N]) {
  L r = L::set(c[0]);
  for (size_t i = 1; i < N; ++i) r = r * x + L::set(c[i]);
  return r;
}

template <class L>
inline void sincos(L u, L& s, L& c) {
  L one = L::set(1.0);
  L sgn = copysign(one, u);
  L x = abs(u);
  L j = floor(x * L::set(kFourOverPi));
  L odd = j - L::set(2.0) * floor(j * L::set(0.5));
  j = j + odd;
  L z = ((x - j * L::set(kDP1)) - j * L::set(kDP2)) - j * L::set(kDP3);
  L j8 = j - L::set(8.0) * floor(j * L::set(0.125));
  auto hi = j8 > L::set(3.0);
  L j4 = select(hi, j8 - L::set(4.0), j8);
  L neg_one = L::set(-1.0);
  L sign_s = select(hi, sgn * neg_one, sgn);
  L sign_c = select(hi, neg_one, one);
  auto swap = j4 > one;
  sign_c = select(swap, sign_c * neg_one, sign_c);
  L zz = z * z;
  L ps = z + z * zz * polevl(zz, kSin);
  L pc = one - L::set(0.5) * zz + zz * zz * polevl(zz, kCos);
  s = sign_s * select(swap, pc, ps);
  c = sign_c * select(swap, ps, pc);
}

// exp(x) for -700 <= x <= 0
template <class L>
inline L exp_neg(L x) {
  L n = floor(x * L::set(kLog2e) + L::set(0.5));
  x = x - n * L::set(kC1);
  x = x - n * L::set(kC2);
  L xx = x * x;
  L px = x * polevl(xx, kP);
  x = px / (polevl(xx, kQ) - px);
  x = L::set(1.0) + L::set(2.0) * x;
  return x * pow2i(n);
}

template <class L>
inline void lane_math(const double* u, const double* x, double* s, double* c, double* e) {
  L sv, cv;
  sincos(L::load(u), sv, cv);
  sv.store(s);
  cv.store(c);
  exp_neg(L::load(x)).store(e);
}

template <class L>
inline void classify_lanes(const OrbitKernelArgs& a, const double* xs, const double* ys, Cell* out) {
  using M = typename L::mask;
  L x = L::load(xs), y = L::load(ys);
  const L lr = L::set(a.lambda_re), li = L::set(a.lambda_im);
  const L zero = L::set(0.0), one = L::set(1.0);
  M done = L::none();
  L cls = L::set(class_undetermined), per = zero, steps = L::set(a.budget), small = zero;
  const size_t np = a.cycle_re.size();

  for (int step = 1; step <= a.budget; ++step) {
    L st = L::set(step);
    L u = (x - y) * (x + y);
    L v = (x + x) * y;
    L av = abs(v);
    M wild = abs(u) > L::set(kMaxU);
    av = select(av > L::set(kMaxV), L::set(kMaxV), av);
    L e = exp_neg(av * L::set(-2.0));
    L ope = one + e;
    L t = copysign((one - e) / ope, v);
    L h = (L::set(4.0) * e) / (ope * ope);
    L s, c;
    sincos(u, s, c);
    L d = c * c * h + t * t;
    M pole = d < L::set(1e-24) * h;
    L tr = s * c * h / d, ti = t / d;
    L fr = lr * tr - li * ti;
    L fi = lr * ti + li * tr;
    M bounded = (fr * fr + fi * fi) <= L::set(1e30);
    M esc = andnot(done, pole | wild | !bounded);
    cls = select(esc, L::set(class_escape), cls);
    per = select(esc, zero, per);
    steps = select(esc, st, steps);
    done = done | esc;
    x = select(done, x, fr);
    y = select(done, y, fi);

    small = select((x * x + y * y) < L::set(1e-12), small + one, zero);
    M org = andnot(done, small >= L::set(3.0));
    cls = select(org, L::set(class_origin), cls);
    per = select(org, one, per);
    steps = select(org, st, steps);
    done = done | org;

    if (np) {
      M hit = L::none();
      for (size_t k = 0; k < np; ++k) {
        L dx = x - L::set(a.cycle_re[k]), dy = y - L::set(a.cycle_im[k]);
        hit = hit | ((dx * dx + dy * dy) < L::set(1e-8));
      }
      hit = andnot(done, hit);
      cls = select(hit, L::set(a.period), cls);
      per = select(hit, L::set(a.period), per);
      steps = select(hit, st, steps);
      done = done | hit;
    }
    if (all(done)) break;
  }
  double cb[L::width], pb[L::width], sb[L::width];
  cls.store(cb);
  per.store(pb);
  steps.store(sb);
  for (int i = 0; i < L::width; ++i)
    out[i] = Cell{static_cast<std::int32_t>(cb[i]), static_cast<std::int32_t>(pb[i]), static_cast<std::int32_t>(sb[i])};
}

}  // namespace tanz2::kern
