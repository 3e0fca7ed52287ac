#pragma once

// Integer-order Bessel functions of the first kind, J_n(x), for the
// argument range the rate models need (|n| up to a few hundred,
// 0 <= x up to a few hundred), plus the leading large-argument
// asymptotic used as a diagnostic.

#include <vector>

namespace qmod::bessel {

// sanity bound on |n|; model usage stays far below this
inline constexpr int kMaxOrder = 1000000;

// J_n(x) for any integer n (negative orders via J_{-n} = (-1)^n J_n).
// x must be finite and >= 0. Absolute error <= 1e-12 for |n| <= 300,
// x <= 300.
double j(int n, double x);

// Row of J_n(x) for n = -n_max..n_max, parity-mirrored from the
// non-negative orders so J_{-n} == (-1)^n J_n holds exactly.
struct JRow {
  int n_max = 0;
  std::vector<double> v;  // v[n + n_max] = J_n(x)

  double operator()(int n) const { return v[static_cast<size_t>(n + n_max)]; }
};

JRow j_row(int n_max, double x);

// Leading large-argument form sqrt(2/(pi x)) cos(x - n pi/2 - pi/4),
// valid for n < x; error O(x^{-3/2}).
double j_asymptotic(int n, double x);

}  // namespace qmod::bessel
