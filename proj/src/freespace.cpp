#include "qmod/freespace.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qmod::freespace {

Kernel::Kernel(const FreeSpaceParams& p, bool flat_rate) : p_(p) {
  p_.validate();
  jn_ = bessel::j_row(p.n0, p.chi());
  jm_ = bessel::j_row(p.m0, p.chi_prime());
  const double omega0_eff = p.omega0_over_omega * p.mapping().omega0_shift_factor;
  g0_.resize((2 * static_cast<size_t>(p.n0) + 1) * (2 * static_cast<size_t>(p.m0) + 1));
  for (int np = -p.n0; np <= p.n0; ++np) {
    for (int mp = -p.m0; mp <= p.m0; ++mp) {
      double v = p.gamma_fs;
      if (!flat_rate) {
        const double dos = 1.0 + (2.0 * np + 4.0 * mp) / omega0_eff;
        v = p.gamma_fs * dos * dos * dos;
      }
      g0_[static_cast<size_t>(np + p.n0) * (2 * static_cast<size_t>(p.m0) + 1) +
          static_cast<size_t>(mp + p.m0)] = v;
    }
  }
}

// Quadruple sum in fixed order (n, n', m, m', ascending). Each term's
// phase collapses to k (2 w t + phi) with k = (n - n') + 2 (m - m'),
// so weight is tabulated over k.
double Kernel::sum_with(const std::vector<double>& weight) const {
  const int n0 = p_.n0, m0 = p_.m0;
  const int kmax = 2 * n0 + 4 * m0;
  double acc = 0.0;
  for (int n = -n0; n <= n0; ++n) {
    for (int np = -n0; np <= n0; ++np) {
      const double jnp = jn_(n) * jn_(np);
      for (int m = -m0; m <= m0; ++m) {
        const double jmm = jnp * jm_(m);
        for (int mp = -m0; mp <= m0; ++mp) {
          const int k = (n - np) + 2 * (m - mp);
          acc += jmm * jm_(mp) * g0_at(np, mp) * weight[static_cast<size_t>(k + kmax)];
        }
      }
    }
  }
  return acc;
}

double Kernel::gamma(double t) const {
  const int kmax = 2 * p_.n0 + 4 * p_.m0;
  const double theta = 2.0 * p_.omega * t + p_.phi;
  std::vector<double> ctab(2 * static_cast<size_t>(kmax) + 1);
  for (int k = -kmax; k <= kmax; ++k) ctab[static_cast<size_t>(k + kmax)] = std::cos(k * theta);
  return sum_with(ctab);
}

double Kernel::gamma_imag(double t) const {
  const int kmax = 2 * p_.n0 + 4 * p_.m0;
  const double theta = 2.0 * p_.omega * t + p_.phi;
  std::vector<double> stab(2 * static_cast<size_t>(kmax) + 1);
  // Im of e^{-i k theta}
  for (int k = -kmax; k <= kmax; ++k) stab[static_cast<size_t>(k + kmax)] = -std::sin(k * theta);
  return sum_with(stab);
}

double Kernel::big_gamma(double t) const {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  const int kmax = 2 * p_.n0 + 4 * p_.m0;
  const double theta_t = 2.0 * p_.omega * t + p_.phi;
  std::vector<double> itab(2 * static_cast<size_t>(kmax) + 1);
  for (int k = -kmax; k <= kmax; ++k)
    itab[static_cast<size_t>(k + kmax)] =
        k == 0 ? t : (std::sin(k * theta_t) - std::sin(k * p_.phi)) / (2.0 * p_.omega * k);
  return sum_with(itab);
}

double Kernel::population(double t) const { return std::exp(-2.0 * big_gamma(t)) - 0.5; }

double gamma_f(const FreeSpaceParams& p, double t) { return Kernel(p).gamma(t); }

double big_gamma_f_closed(const FreeSpaceParams& p, double t) { return Kernel(p).big_gamma(t); }

double population_f(const FreeSpaceParams& p, double t) { return Kernel(p).population(t); }

}  // namespace qmod::freespace
