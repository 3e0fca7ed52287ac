#include "qmod/cavity.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmod/errors.hpp"

namespace qmod::cavity {

double coeff_gamma_bar(const CavityParams& p, int n) {
  const double dn = n * p.omega - p.delta_c;
  return p.gamma0() * p.kappa * p.kappa / (p.kappa * p.kappa + dn * dn);
}

double coeff_delta_bar(const CavityParams& p, int n) {
  const double dn = n * p.omega - p.delta_c;
  return dn * p.g * p.g / (p.kappa * p.kappa + dn * dn);
}

Kernel::Kernel(const CavityParams& p, int n_bar, bool flat_reservoir) : p_(p), n_bar_(n_bar) {
  p_.validate();
  if (n_bar < 0) throw std::invalid_argument("n_bar must be >= 0");
  jrow_ = bessel::j_row(n_bar, p.chi);
  gam_.resize(2 * static_cast<size_t>(n_bar) + 1);
  del_.resize(gam_.size());
  for (int n = -n_bar; n <= n_bar; ++n) {
    gam_[static_cast<size_t>(n + n_bar)] = flat_reservoir ? p.gamma0() : coeff_gamma_bar(p, n);
    del_[static_cast<size_t>(n + n_bar)] = coeff_delta_bar(p, n);
  }
}

// sum_{m,n} coeff_n J_m J_n weight(n - m), with weight tabulated over
// the difference index d = n - m in [-2 n_bar, 2 n_bar].
double Kernel::sum_with(const std::vector<double>& coeff, const std::vector<double>& weight) const {
  const int nb = n_bar_;
  double acc = 0.0;
  for (int m = -nb; m <= nb; ++m) {
    const double jm = jrow_(m);
    double inner = 0.0;
    for (int n = -nb; n <= nb; ++n)
      inner += coeff[static_cast<size_t>(n + nb)] * jrow_(n) *
               weight[static_cast<size_t>((n - m) + 2 * nb)];
    acc += jm * inner;
  }
  return acc;
}

double Kernel::gamma(double t) const {
  const int nb = n_bar_;
  const double theta = p_.omega * t + p_.phi;
  std::vector<double> ctab(4 * static_cast<size_t>(nb) + 1);
  for (int d = -2 * nb; d <= 2 * nb; ++d)
    ctab[static_cast<size_t>(d + 2 * nb)] = std::cos(d * theta);
  return sum_with(gam_, ctab);
}

double Kernel::omega_shift(double t) const {
  const int nb = n_bar_;
  const double theta = p_.omega * t + p_.phi;
  std::vector<double> ctab(4 * static_cast<size_t>(nb) + 1);
  for (int d = -2 * nb; d <= 2 * nb; ++d)
    ctab[static_cast<size_t>(d + 2 * nb)] = std::cos(d * theta);
  return sum_with(del_, ctab);
}

double Kernel::big_gamma(double t) const {
  if (t < 0.0) throw std::invalid_argument("t must be >= 0");
  const int nb = n_bar_;
  const double theta_t = p_.omega * t + p_.phi;
  // Int_0^t cos(d (w tau + phi)) dtau, exact per difference index
  std::vector<double> itab(4 * static_cast<size_t>(nb) + 1);
  for (int d = -2 * nb; d <= 2 * nb; ++d)
    itab[static_cast<size_t>(d + 2 * nb)] =
        d == 0 ? t : (std::sin(d * theta_t) - std::sin(d * p_.phi)) / (d * p_.omega);
  return sum_with(gam_, itab);
}

double Kernel::population(double t) const { return std::exp(-2.0 * big_gamma(t)) - 0.5; }

double Kernel::no_coherence_rate() const {
  const int nb = n_bar_;
  double acc = 0.0;
  for (int n = -nb; n <= nb; ++n) {
    const double jn = jrow_(n);
    acc += gam_[static_cast<size_t>(n + nb)] * jn * jn;
  }
  return acc;
}

double gamma_t(const CavityParams& p, const Truncation& trunc, double t) {
  return Kernel(p, trunc.n_bar).gamma(t);
}

double omega_t(const CavityParams& p, const Truncation& trunc, double t) {
  return Kernel(p, trunc.n_bar).omega_shift(t);
}

double big_gamma_closed(const CavityParams& p, const Truncation& trunc, double t) {
  return Kernel(p, trunc.n_bar).big_gamma(t);
}

double population(const CavityParams& p, const Truncation& trunc, double t) {
  return Kernel(p, trunc.n_bar).population(t);
}

double gamma_no_coherence(const CavityParams& p, const Truncation& trunc) {
  return Kernel(p, trunc.n_bar).no_coherence_rate();
}

double gamma_n1_analytic(const CavityParams& p, double t) {
  p.validate();
  if (p.delta_c != 0.0)
    throw std::invalid_argument("delta_c must be 0 for the n_bar = 1 analytic rate");
  const double j0 = bessel::j(0, p.chi);
  const double j1 = bessel::j(1, p.chi);
  const double jm1 = -j1;
  const double k2 = p.kappa * p.kappa;
  const double lor = k2 / (k2 + p.omega * p.omega);
  return p.gamma0() *
         (j0 * j0 +
          lor * (j1 * j1 + jm1 * jm1 + 2.0 * jm1 * j1 * std::cos(2.0 * (p.omega * t + p.phi))));
}

double omega_shift_n1_analytic(const CavityParams& p, double t) {
  p.validate();
  if (p.delta_c != 0.0)
    throw std::invalid_argument("delta_c must be 0 for the n_bar = 1 analytic shift");
  const double j0 = bessel::j(0, p.chi);
  const double j1 = bessel::j(1, p.chi);
  const double jm1 = -j1;
  const double obar = p.g * p.g * p.omega / (p.kappa * p.kappa + p.omega * p.omega);
  return obar * j0 * (j1 - jm1) * std::cos(p.omega * t + p.phi);
}

Truncation choose_truncation(const CavityParams& p, double tol, double t_max, int n_bar_cap) {
  p.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");

  constexpr int kGridPoints = 64;
  std::vector<double> grid(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) grid[static_cast<size_t>(i)] = t_max * i / (kGridPoints - 1);

  const auto eval = [&](int n_bar) {
    Kernel k(p, n_bar);
    std::vector<double> out(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) out[i] = k.big_gamma(grid[i]);
    return out;
  };

  int cand = static_cast<int>(std::ceil(p.chi)) + 8;
  std::vector<double> low = eval(cand);
  for (;;) {
    if (cand > n_bar_cap)
      throw convergence_error("truncation: no convergence by n_bar = " + std::to_string(n_bar_cap));
    const std::vector<double> high = eval(2 * cand);
    double delta = 0.0;
    for (size_t i = 0; i < low.size(); ++i) delta = std::max(delta, std::abs(low[i] - high[i]));
    if (delta <= tol) {
      Truncation tr;
      tr.n_bar = cand;
      tr.auto_selected = true;
      tr.achieved_tol = delta;
      return tr;
    }
    cand *= 2;
    low = high;
  }
}

}  // namespace qmod::cavity
