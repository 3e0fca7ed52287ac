#pragma once

// Broadband-cavity model: time-dependent decay rate gamma(t) and
// frequency shift Omega(t) as truncated double Bessel sums over the
// modulation sidebands, the closed-form integrated decay Gamma(t),
// the population law <S_z(t)> = exp(-2 Gamma) - 1/2, and the analytic
// n_bar = 1 specializations at resonance.

#include "qmod/bessel.hpp"
#include "qmod/params.hpp"

namespace qmod::cavity {

// Lorentzian channel rate gamma_bar_n = gamma0 kappa^2 / (kappa^2 + (n w - d_c)^2).
double coeff_gamma_bar(const CavityParams& p, int n);

// Channel shift delta_bar_n = (n w - d_c) g^2 / (kappa^2 + (n w - d_c)^2).
double coeff_delta_bar(const CavityParams& p, int n);

// Precomputes the Bessel row and channel coefficients for one parameter
// set and truncation; evaluation at each t is a fixed-order double sum
// (m outer, n inner, ascending) so results are reproducible bit-for-bit.
class Kernel {
 public:
  Kernel(const CavityParams& p, int n_bar, bool flat_reservoir = false);

  double gamma(double t) const;        // decay rate
  double omega_shift(double t) const;  // frequency shift
  double big_gamma(double t) const;    // Int_0^t gamma, in closed form
  double population(double t) const;   // exp(-2 Gamma) - 1/2
  double no_coherence_rate() const;    // diagonal (n = m) part, t-independent

  const CavityParams& params() const { return p_; }
  int n_bar() const { return n_bar_; }

 private:
  CavityParams p_;
  int n_bar_;
  bessel::JRow jrow_;
  std::vector<double> gam_;  // gamma_bar_n, index n + n_bar
  std::vector<double> del_;  // delta_bar_n

  double sum_with(const std::vector<double>& coeff, const std::vector<double>& weight) const;
};

// One-shot wrappers matching the kernel methods.
double gamma_t(const CavityParams& p, const Truncation& trunc, double t);
double omega_t(const CavityParams& p, const Truncation& trunc, double t);
double big_gamma_closed(const CavityParams& p, const Truncation& trunc, double t);
double population(const CavityParams& p, const Truncation& trunc, double t);
double gamma_no_coherence(const CavityParams& p, const Truncation& trunc);

// n_bar = 1, delta_c = 0 closed forms. Both must agree with the general
// sums at n_bar = 1 to machine precision; both reject delta_c != 0.
double gamma_n1_analytic(const CavityParams& p, double t);
double omega_shift_n1_analytic(const CavityParams& p, double t);

// Smallest n_bar from the schedule {ceil(chi)+8, then doubling} whose
// Gamma(t) changes by at most tol on a 64-point grid over [0, t_max]
// when n_bar is doubled. Throws convergence_error past n_bar_cap.
Truncation choose_truncation(const CavityParams& p, double tol, double t_max,
                             int n_bar_cap = 4096);

}  // namespace qmod::cavity
