#pragma once

#include "tanz2/lattice.hpp"
#include "tanz2/map.hpp"

#include <vector>

namespace tanz2 {

inline constexpr double asymptotic_exclusion = 1e-12;
inline constexpr double round_trip_tol = 1e-9;

// A = (1/2i) Log((lambda + iz)/(lambda - iz)) on the principal branch, written
// so the real part comes from an atan2 and the imaginary part from a log1p.
template <class R>
Complex<R> arctan_log(const Param<R>& p, const Complex<R>& z);

// the same value through the complex logarithm of the ratio, for cross checks
template <class R>
Complex<R> arctan_log_direct(const Param<R>& p, const Complex<R>& z);

template <class R>
Point<R> inverse_branch(const Param<R>& p, int n, const Point<R>& z);

// key = (n_1, ..., n_k); the n_1 branch is applied first and n_k last
template <class R>
Point<R> composed_inverse(const Param<R>& p, const std::vector<int>& key, const Point<R>& z);

// every intermediate value: stages[0] = inverse_branch(n_1, z), ..., stages[k-1] = result
template <class R>
std::vector<Point<R>> composed_inverse_stages(const Param<R>& p, const std::vector<int>& key, const Point<R>& z);

}  // namespace tanz2
