#include "qmod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qmod/bessel.hpp"
#include "qmod/errors.hpp"

namespace qmod::oracle {

namespace {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK dqk15 abscissae and
// weights on [-1, 1]).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679,  0.1903505780647854,  0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
  double value = 0.0;
  double err = 0.0;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double hlgth = 0.5 * (b - a);
  const double centr = 0.5 * (a + b);

  double fv1[7], fv2[7];
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;  // Kronrod indices shared with Gauss
    const double absc = hlgth * kXgk[jtw];
    fv1[jtw] = f(centr - absc);
    fv2[jtw] = f(centr + absc);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    fv1[jtwm1] = f(centr - absc);
    fv2[jtwm1] = f(centr + absc);
    resk += kWgk[jtwm1] * (fv1[jtwm1] + fv2[jtwm1]);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  resasc *= std::abs(hlgth);

  Panel p;
  p.value = resk * hlgth;
  p.err = std::abs((resk - resg) * hlgth);
  // QUADPACK error heuristic: sharpen the raw K-G difference when the
  // panel is resolved, keep it conservative when it is not.
  if (resasc != 0.0 && p.err != 0.0)
    p.err = resasc * std::min(1.0, std::pow(200.0 * p.err / resasc, 1.5));
  return p;
}

void refine(const std::function<double(double)>& f, double a, double b, const Panel& panel,
            double tol, int depth, int max_depth, double& value_acc, double& err_acc) {
  if (panel.err <= tol) {
    value_acc += panel.value;
    err_acc += panel.err;
    return;
  }
  if (depth >= max_depth)
    throw convergence_error("quadrature: panel not converged at max_depth");
  const double mid = 0.5 * (a + b);
  const Panel left = gk15(f, a, mid);
  const Panel right = gk15(f, mid, b);
  refine(f, a, mid, left, 0.5 * tol, depth + 1, max_depth, value_acc, err_acc);
  refine(f, mid, b, right, 0.5 * tol, depth + 1, max_depth, value_acc, err_acc);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  spec.validate();
  if (!(std::isfinite(a) && std::isfinite(b)) || a > b)
    throw std::invalid_argument("integrate: interval must be finite with a <= b");
  if (a == b) return {0.0, 0.0};

  const Panel whole = gk15(f, a, b);
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole.value));
  double value = 0.0, err = 0.0;
  refine(f, a, b, whole, tol, 0, spec.max_depth, value, err);
  return {value, err};
}

double bessel_integral_oracle(int n, double x) {
  if (!std::isfinite(x) || x < 0.0) throw std::invalid_argument("bessel oracle: x must be finite and >= 0");
  if (n > bessel::kMaxOrder || n < -bessel::kMaxOrder)
    throw std::invalid_argument("bessel oracle: |n| exceeds sanity bound");
  constexpr double pi = 3.14159265358979323846;
  const auto f = [n, x](double tau) { return std::cos(n * tau - x * std::sin(tau)); };
  // The phase n*tau - x*sin(tau) swings by up to (|n|+x)*pi; split into
  // sub-half-period slices so each panel starts resolved.
  const int panels = std::max(4, std::abs(n) + static_cast<int>(std::ceil(x)));
  QuadratureSpec spec;
  spec.abs_tol = 1e-13 / panels;
  spec.rel_tol = 1e-13;
  spec.max_depth = 45;
  double acc = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double a = pi * k / panels;
    const double b = pi * (k + 1) / panels;
    acc += integrate(f, a, b, spec).value;
  }
  return acc / pi;
}

double brute_sum_gamma(const CavityParams& p, int n_bar, double t) {
  p.validate();
  if (n_bar < 0 || n_bar > 64) throw std::invalid_argument("brute_sum_gamma: n_bar must be in [0, 64]");
  const double g0 = p.gamma0();
  double acc = 0.0;
  for (int m = -n_bar; m <= n_bar; ++m) {
    for (int n = -n_bar; n <= n_bar; ++n) {
      const double dn = n * p.omega - p.delta_c;
      const double gbar = g0 * p.kappa * p.kappa / (p.kappa * p.kappa + dn * dn);
      acc += gbar * bessel::j(m, p.chi) * bessel::j(n, p.chi) *
             std::cos((n - m) * (p.omega * t + p.phi));
    }
  }
  return acc;
}

double brute_sum_omega(const CavityParams& p, int n_bar, double t) {
  p.validate();
  if (n_bar < 0 || n_bar > 64) throw std::invalid_argument("brute_sum_omega: n_bar must be in [0, 64]");
  double acc = 0.0;
  for (int m = -n_bar; m <= n_bar; ++m) {
    for (int n = -n_bar; n <= n_bar; ++n) {
      const double dn = n * p.omega - p.delta_c;
      const double dbar = dn * p.g * p.g / (p.kappa * p.kappa + dn * dn);
      acc += dbar * bessel::j(m, p.chi) * bessel::j(n, p.chi) *
             std::cos((n - m) * (p.omega * t + p.phi));
    }
  }
  return acc;
}

double brute_sum_gamma_f(const FreeSpaceParams& p, double t) {
  p.validate();
  if (p.n0 > 8 || p.m0 > 8) throw std::invalid_argument("brute_sum_gamma_f: n0 and m0 must be <= 8");
  const double chi = p.chi();
  const double chip = p.chi_prime();
  const double omega0_eff = p.omega0_over_omega * p.mapping().omega0_shift_factor;
  double acc = 0.0;
  for (int n = -p.n0; n <= p.n0; ++n) {
    for (int np = -p.n0; np <= p.n0; ++np) {
      for (int m = -p.m0; m <= p.m0; ++m) {
        for (int mp = -p.m0; mp <= p.m0; ++mp) {
          const double dos = 1.0 + (2.0 * np + 4.0 * mp) / omega0_eff;
          const double g0nm = p.gamma_fs * dos * dos * dos;
          const double angle = (n - np) * (2.0 * p.omega * t + p.phi) +
                               (m - mp) * (4.0 * p.omega * t + 2.0 * p.phi);
          acc += bessel::j(n, chi) * bessel::j(np, chi) * bessel::j(m, chip) *
                 bessel::j(mp, chip) * g0nm * std::cos(angle);
        }
      }
    }
  }
  return acc;
}

}  // namespace qmod::oracle
