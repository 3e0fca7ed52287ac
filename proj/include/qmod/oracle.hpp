#pragma once

// Independent reference engines used to validate the closed forms:
// adaptive Gauss-Kronrod quadrature, the integral definition of J_n,
// and literal nested-loop evaluations of the rate sums. Nothing here
// calls the optimized summation paths in cavity.cpp / freespace.cpp.

#include <functional>
#include <stdexcept>

#include "qmod/params.hpp"

namespace qmod::oracle {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;  // bisection levels

  void validate() const {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
    if (max_depth < 1 || max_depth > 60) throw std::invalid_argument("max_depth must be in [1, 60]");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
};

// Adaptive 7-15 Gauss-Kronrod bisection. Throws convergence_error if a
// panel still exceeds its tolerance share at max_depth.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// J_n(x) = (1/pi) Int_0^pi cos(n tau - x sin tau) dtau, evaluated by
// quadrature only. Valid for any integer n, x >= 0.
double bessel_integral_oracle(int n, double x);

// Literal nested-loop rate sums with no algebraic shortcuts; scalar
// Bessel evaluations per term. Truncations are capped (n_bar <= 64,
// n0/m0 <= 8) to guard against accidental O(N^4) blowup.
double brute_sum_gamma(const CavityParams& p, int n_bar, double t);
double brute_sum_omega(const CavityParams& p, int n_bar, double t);
double brute_sum_gamma_f(const FreeSpaceParams& p, double t);

}  // namespace qmod::oracle
