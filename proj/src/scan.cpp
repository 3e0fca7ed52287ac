#include "qmod/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "qmod/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmod::scan {

namespace {

std::vector<double> uniform_grid(double t_max, double dt) {
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
  if (!(dt > 0.0) || dt > t_max) throw std::invalid_argument("dt must be in (0, t_max]");
  const int n = static_cast<int>(std::llround(t_max / dt));
  std::vector<double> t(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[static_cast<size_t>(i)] = i * dt;
  return t;
}

}  // namespace

int effective_threads() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("QMOD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = std::min<long>(n, v);
  }
  return n;
}

RateTrace trace_cavity(const CavityParams& p, double t_max, double dt,
                       const TruncationSpec& trunc, Exec exec) {
  p.validate();
  RateTrace tr;
  tr.t = uniform_grid(t_max, dt);
  if (trunc.n_bar) {
    tr.truncation.n_bar = *trunc.n_bar;
    tr.truncation.auto_selected = false;
  } else {
    tr.truncation = cavity::choose_truncation(p, trunc.tol, t_max);
  }

  const cavity::Kernel kernel(p, tr.truncation.n_bar);
  const auto n = static_cast<std::ptrdiff_t>(tr.t.size());
  tr.gamma.resize(tr.t.size());
  tr.omega_shift.resize(tr.t.size());
  tr.big_gamma.resize(tr.t.size());
  tr.sz.resize(tr.t.size());

  const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads()) if (par)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<size_t>(i);
    const double t = tr.t[u];
    tr.gamma[u] = kernel.gamma(t);
    tr.omega_shift[u] = kernel.omega_shift(t);
    tr.big_gamma[u] = kernel.big_gamma(t);
    tr.sz[u] = std::exp(-2.0 * tr.big_gamma[u]) - 0.5;
  }
  (void)par;

  tr.negative_gamma = std::any_of(tr.gamma.begin(), tr.gamma.end(), [](double g) { return g < 0.0; });
  return tr;
}

RateTrace trace_freespace(const FreeSpaceParams& p, double t_max, double dt, Exec exec) {
  p.validate();
  RateTrace tr;
  tr.t = uniform_grid(t_max, dt);
  tr.truncation.n_bar = p.n0;  // echo; no convergence-driven selection in free space
  tr.truncation.auto_selected = false;

  const freespace::Kernel kernel(p);
  const auto n = static_cast<std::ptrdiff_t>(tr.t.size());
  tr.gamma.resize(tr.t.size());
  tr.omega_shift.assign(tr.t.size(), 0.0);  // shift part not evaluated
  tr.big_gamma.resize(tr.t.size());
  tr.sz.resize(tr.t.size());

  const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads()) if (par)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<size_t>(i);
    const double t = tr.t[u];
    tr.gamma[u] = kernel.gamma(t);
    tr.big_gamma[u] = kernel.big_gamma(t);
    tr.sz[u] = std::exp(-2.0 * tr.big_gamma[u]) - 0.5;
  }
  (void)par;

  tr.negative_gamma = std::any_of(tr.gamma.begin(), tr.gamma.end(), [](double g) { return g < 0.0; });
  return tr;
}

SweepResult sweep_chi(const CavityParams& base, const std::vector<double>& chi_values,
                      double at_time, Observable obs, const TruncationSpec& trunc, Exec exec) {
  base.validate();
  if (!(at_time >= 0.0)) throw std::invalid_argument("at_time must be >= 0");
  if (chi_values.empty()) throw std::invalid_argument("chi_values must be nonempty");
  for (size_t i = 0; i < chi_values.size(); ++i) {
    if (!std::isfinite(chi_values[i]) || chi_values[i] < 0.0)
      throw std::invalid_argument("chi_values must be finite and >= 0");
    if (i > 0 && !(chi_values[i] > chi_values[i - 1]))
      throw std::invalid_argument("chi_values must be strictly increasing");
  }

  constexpr double kPi = 3.14159265358979323846;
  SweepResult sw;
  sw.axis_name = "chi";
  sw.observable_name = obs == Observable::population ? "population" : "shift";
  sw.axis_values = chi_values;
  sw.variant_names = {"phi0", "phi_pi_2"};
  sw.values.assign(2, std::vector<double>(chi_values.size(), 0.0));
  sw.n_bar_used.assign(2, std::vector<int>(chi_values.size(), 0));
  sw.status.assign(chi_values.size(), "ok");
  sw.base = base;
  sw.at_time = at_time;
  sw.tol = trunc.tol;

  const double phis[2] = {0.0, kPi / 2.0};
  // truncation convergence is judged on [0, t]; keep a floor for t ~ 0
  const double t_conv = std::max(at_time, 1.0);
  const auto n = static_cast<std::ptrdiff_t>(chi_values.size());

  const bool par = exec == Exec::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads()) if (par)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<size_t>(i);
    for (int v = 0; v < 2; ++v) {
      CavityParams p = base;
      p.chi = chi_values[u];
      p.phi = phis[v];
      try {
        Truncation tr;
        if (trunc.n_bar) {
          tr.n_bar = *trunc.n_bar;
        } else {
          tr = cavity::choose_truncation(p, trunc.tol, t_conv);
        }
        const cavity::Kernel kernel(p, tr.n_bar);
        sw.values[static_cast<size_t>(v)][u] = obs == Observable::population
                                                   ? kernel.population(at_time)
                                                   : kernel.omega_shift(at_time);
        sw.n_bar_used[static_cast<size_t>(v)][u] = tr.n_bar;
      } catch (const convergence_error& e) {
        sw.values[static_cast<size_t>(v)][u] = std::numeric_limits<double>::quiet_NaN();
        sw.n_bar_used[static_cast<size_t>(v)][u] = -1;
        sw.status[u] = e.what();
      }
    }
  }
  (void)par;
  return sw;
}

std::vector<ConvergenceRow> convergence_report(const CavityParams& p, double t_max,
                                               const std::vector<int>& n_bar_list) {
  p.validate();
  if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
  if (n_bar_list.empty()) throw std::invalid_argument("n_bar_list must be nonempty");
  for (size_t i = 0; i < n_bar_list.size(); ++i) {
    if (n_bar_list[i] < 0) throw std::invalid_argument("n_bar values must be >= 0");
    if (i > 0 && n_bar_list[i] <= n_bar_list[i - 1])
      throw std::invalid_argument("n_bar_list must be strictly ascending");
  }

  constexpr int kGridPoints = 64;
  std::vector<double> grid(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) grid[static_cast<size_t>(i)] = t_max * i / (kGridPoints - 1);

  const auto eval = [&](int n_bar) {
    cavity::Kernel k(p, n_bar);
    std::vector<double> out(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) out[i] = k.big_gamma(grid[i]);
    return out;
  };

  std::vector<std::vector<double>> curves;
  curves.reserve(n_bar_list.size() + 1);
  for (int nb : n_bar_list) curves.push_back(eval(nb));
  curves.push_back(eval(2 * n_bar_list.back()));  // reference for the last row

  std::vector<ConvergenceRow> rows(n_bar_list.size());
  for (size_t i = 0; i < n_bar_list.size(); ++i) {
    rows[i].n_bar = n_bar_list[i];
    rows[i].big_gamma_tmax = curves[i].back();
    double delta = 0.0;
    for (size_t j = 0; j < grid.size(); ++j)
      delta = std::max(delta, std::abs(curves[i][j] - curves[i + 1][j]));
    rows[i].max_grid_delta = delta;
  }
  return rows;
}

}  // namespace qmod::scan
