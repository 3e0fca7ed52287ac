#pragma once

// Figure-backing datasets: time traces, chi sweeps at fixed time, and
// truncation-convergence reports. Grid points are independent work
// units; the parallel path distributes them with OpenMP and writes each
// result into its own slot, so output is bit-identical to the serial
// reference for any thread count.

#include <optional>
#include <string>
#include <vector>

#include "qmod/cavity.hpp"
#include "qmod/freespace.hpp"
#include "qmod/params.hpp"

namespace qmod::scan {

enum class Exec { serial, parallel };

enum class Observable { population, shift };

// Fixed n_bar override, or convergence-driven selection at `tol`.
struct TruncationSpec {
  std::optional<int> n_bar;
  double tol = 1e-8;
};

struct RateTrace {
  std::vector<double> t;
  std::vector<double> gamma;
  std::vector<double> omega_shift;
  std::vector<double> big_gamma;
  std::vector<double> sz;  // exp(-2 big_gamma) - 1/2
  Truncation truncation;
  bool negative_gamma = false;  // any sampled gamma < 0 (diagnostic)
};

// One row of `values` per phase variant (phi = 0 and phi = pi/2).
struct SweepResult {
  std::string axis_name;
  std::string observable_name;
  std::vector<double> axis_values;
  std::vector<std::string> variant_names;
  std::vector<std::vector<double>> values;   // [variant][point]; NaN if invalid
  std::vector<std::vector<int>> n_bar_used;  // [variant][point]; -1 if invalid
  std::vector<std::string> status;           // per point: "ok" or failure reason
  CavityParams base;
  double at_time = 0.0;
  double tol = 0.0;
};

struct ConvergenceRow {
  int n_bar = 0;
  double big_gamma_tmax = 0.0;
  double max_grid_delta = 0.0;  // vs next row (last row: vs doubled n_bar)
};

// Number of workers the parallel path may use; the QMOD_THREADS
// environment variable caps it.
int effective_threads();

RateTrace trace_cavity(const CavityParams& p, double t_max, double dt,
                       const TruncationSpec& trunc = {}, Exec exec = Exec::parallel);

RateTrace trace_freespace(const FreeSpaceParams& p, double t_max, double dt,
                          Exec exec = Exec::parallel);

// Evaluates the observable at `at_time` for each chi, with per-point
// (and per-variant) truncation selection. Non-convergent points are
// reported as NaN with a reason, not dropped.
SweepResult sweep_chi(const CavityParams& base, const std::vector<double>& chi_values,
                      double at_time, Observable obs, const TruncationSpec& trunc = {},
                      Exec exec = Exec::parallel);

std::vector<ConvergenceRow> convergence_report(const CavityParams& p, double t_max,
                                               const std::vector<int>& n_bar_list);

}  // namespace qmod::scan
