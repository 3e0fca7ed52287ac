#include "qmod/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

// J_n(x) by Miller's downward recurrence with Neumann-sum normalization,
//
//   J_{k-1}(x) = (2k/x) J_k(x) - J_{k+1}(x),
//   J_0(x) + 2 [J_2(x) + J_4(x) + ...] = 1.
//
// The recurrence is started well above max(n_max, x): below the turning
// point k ~ x the trial solution picks up a Y_k admixture, so the start
// order must sit in the region where J_k is the minimal solution.
// For x below the series cutoff the two-term power series is exact to
// double precision.

namespace qmod::bessel {

namespace {

constexpr double kSeriesCutoff = 1e-6;
constexpr double kRescaleLimit = 1e250;

void check_inputs(int n, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("bessel: x must be finite");
  if (x < 0.0) throw std::invalid_argument("bessel: x must be >= 0");
  if (n > kMaxOrder || n < -kMaxOrder)
    throw std::invalid_argument("bessel: |n| exceeds sanity bound " + std::to_string(kMaxOrder));
}

// J_n(x) ~ (x/2)^n/n! [1 - (x/2)^2/(n+1) + (x/2)^4/(2(n+1)(n+2))],
// relative error < (x/2)^6 < 1e-38 for x < 1e-6.
double series_small_x(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  const double h = 0.5 * x;
  const double h2 = h * h;
  double lead;
  if (n == 0) {
    lead = 1.0;
  } else {
    // via logs so large n underflows to 0 instead of overflowing n!
    lead = std::exp(n * std::log(h) - std::lgamma(n + 1.0));
  }
  return lead * (1.0 - h2 / (n + 1.0) + h2 * h2 / (2.0 * (n + 1.0) * (n + 2.0)));
}

// Non-negative orders 0..n_max by downward recurrence.
std::vector<double> row_nonneg(int n_max, double x) {
  std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);
  if (x < kSeriesCutoff) {
    for (int n = 0; n <= n_max; ++n) out[static_cast<size_t>(n)] = series_small_x(n, x);
    return out;
  }

  const int m = std::max(n_max, static_cast<int>(std::ceil(x)));
  // guard band: contamination from the trial start decays like the
  // J/Y ratio between start and m; +20 keeps it below 1e-14 at x=300
  const int start = m + static_cast<int>(std::ceil(10.0 + 2.0 * std::sqrt(static_cast<double>(m)))) + 20;

  double prev = 0.0;  // trial J_{k+1}
  double curr = 1.0;  // trial J_k
  double even_sum = 0.0;
  for (int k = start;; --k) {
    if (k <= n_max) out[static_cast<size_t>(k)] = curr;
    if (k > 0 && (k % 2) == 0) even_sum += curr;
    if (k == 0) break;
    const double next = (2.0 * k / x) * curr - prev;
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescaleLimit) {
      constexpr double sc = 1e-250;
      curr *= sc;
      prev *= sc;
      even_sum *= sc;
      for (double& o : out) o *= sc;
    }
  }
  const double norm = 1.0 / (curr + 2.0 * even_sum);  // curr is the trial J_0
  for (double& o : out) o *= norm;
  return out;
}

}  // namespace

double j(int n, double x) {
  check_inputs(n, x);
  const int an = n < 0 ? -n : n;
  const double value = row_nonneg(an, x)[static_cast<size_t>(an)];
  return (n < 0 && (an % 2) != 0) ? -value : value;
}

JRow j_row(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("bessel: n_max must be >= 0");
  check_inputs(n_max, x);
  const std::vector<double> pos = row_nonneg(n_max, x);
  JRow row;
  row.n_max = n_max;
  row.v.assign(2 * static_cast<size_t>(n_max) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    const double jn = pos[static_cast<size_t>(n)];
    row.v[static_cast<size_t>(n + n_max)] = jn;
    row.v[static_cast<size_t>(n_max - n)] = (n % 2) != 0 ? -jn : jn;  // parity, exact
  }
  return row;
}

double j_asymptotic(int n, double x) {
  check_inputs(n, x);
  if (n < 0) throw std::invalid_argument("bessel: asymptotic form requires n >= 0");
  if (x < 1.0) throw std::invalid_argument("bessel: asymptotic form requires x >= 1");
  constexpr double pi = 3.14159265358979323846;
  return std::sqrt(2.0 / (pi * x)) * std::cos(x - 0.5 * pi * n - 0.25 * pi);
}

}  // namespace qmod::bessel
