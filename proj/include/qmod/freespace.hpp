#pragma once

// Free-space model: a weak classical drive maps to simultaneous
// two-photon (index chi) and four-photon (index chi') modulation of the
// transition frequency. The decay rate gamma_f(t) is the real part of a
// four-index Bessel sum weighted by the cubic density-of-states factor
// gamma_{0 n' m'}; the frequency-shift part is not evaluated.

#include <utility>

#include "qmod/bessel.hpp"
#include "qmod/params.hpp"

namespace qmod::freespace {

class Kernel {
 public:
  explicit Kernel(const FreeSpaceParams& p, bool flat_rate = false);

  double gamma(double t) const;      // Re of the coefficient sum
  double gamma_imag(double t) const; // residual Im part, diagnostic
  double big_gamma(double t) const;  // Int_0^t gamma_f, in closed form
  double population(double t) const; // exp(-2 Gamma_f) - 1/2

  const FreeSpaceParams& params() const { return p_; }

 private:
  FreeSpaceParams p_;
  bessel::JRow jn_;         // J_n(chi),  |n| <= n0
  bessel::JRow jm_;         // J_m(chi'), |m| <= m0
  std::vector<double> g0_;  // gamma_{0 n' m'}, row-major over (n' + n0, m' + m0)

  double g0_at(int np, int mp) const {
    return g0_[static_cast<size_t>(np + p_.n0) * (2 * static_cast<size_t>(p_.m0) + 1) +
               static_cast<size_t>(mp + p_.m0)];
  }
  double sum_with(const std::vector<double>& weight) const;
};

double gamma_f(const FreeSpaceParams& p, double t);
double big_gamma_f_closed(const FreeSpaceParams& p, double t);
double population_f(const FreeSpaceParams& p, double t);

}  // namespace qmod::freespace
