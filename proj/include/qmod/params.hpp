#pragma once

// Parameter records for the two reservoir models. All rates are
// dimensionless: the cavity model uses kappa = 1 as the time unit,
// the free-space model uses the unmodulated decay rate gamma.

#include <cmath>
#include <stdexcept>

namespace qmod {

// Broadband-cavity model constants. chi = b/omega is the modulation
// index; the bare modulation amplitude b never appears on its own.
struct CavityParams {
  double g = 0.3;        // qubit-cavity coupling (units of kappa)
  double kappa = 1.0;    // cavity leak rate (inverse time unit)
  double delta_c = 0.0;  // cavity-qubit detuning omega_c - omega_0
  double omega = 0.12;   // modulation frequency (units of kappa)
  double chi = 0.0;      // modulation index b/omega
  double phi = 0.0;      // absolute modulation phase (radians)

  double gamma0() const { return g * g / kappa; }

  void validate() const {
    if (!std::isfinite(g) || g < 0.0) throw std::invalid_argument("g must be finite and >= 0");
    if (!std::isfinite(kappa) || kappa <= 0.0) throw std::invalid_argument("kappa must be finite and > 0");
    if (!std::isfinite(delta_c)) throw std::invalid_argument("delta_c must be finite");
    // omega = 0 would make chi = b/omega meaningless and the closed-form
    // integral singular; the static-shift case is out of range.
    if (!std::isfinite(omega) || omega <= 0.0) throw std::invalid_argument("omega must be finite and > 0");
    if (!std::isfinite(chi) || chi < 0.0) throw std::invalid_argument("chi must be finite and >= 0");
    if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  }
};

// Derived quantities of the weak-drive mapping: a drive of index
// rho = 2*Omega_Rabi/omega modulates the transition at 2*omega and
// 4*omega with amplitudes b and b'.
struct DriveMapping {
  double b_over_omega = 0.0;        // b/omega  = (omega0/omega) rho^2 / 4
  double b_prime_over_omega = 0.0;  // b'/omega = (omega0/omega) rho^4 / 192
  double chi = 0.0;                 // b/(2 omega)
  double chi_prime = 0.0;           // b'/(4 omega)
  double omega0_shift_factor = 0.0; // transition frequency shrinks by 1 - rho^2/4
};

DriveMapping map_drive(double rho, double omega0_over_omega);

// Free-space (unshaped vacuum) model driven by a weak low-frequency
// classical field.
struct FreeSpaceParams {
  double rho = 0.2;                 // drive index 2*Omega_Rabi/omega, < 1
  double omega0_over_omega = 2e4;   // transition / drive frequency ratio, >> 1
  double gamma_fs = 1.0;            // free-space decay rate (inverse time unit)
  double omega = 1.0;               // drive frequency (units of gamma_fs)
  int n0 = 1;                       // truncation of the chi-indexed (two-photon) sums
  int m0 = 0;                       // truncation of the chi'-indexed (four-photon) sums
  double phi = 0.0;                 // drive phase; enters as (2wt+phi), (4wt+2phi)
  bool drop_four_photon = false;    // force chi' = 0 exactly

  DriveMapping mapping() const { return map_drive(rho, omega0_over_omega); }
  double chi() const { return mapping().chi; }
  double chi_prime() const { return drop_four_photon ? 0.0 : mapping().chi_prime; }

  void validate() const {
    if (!std::isfinite(rho) || rho < 0.0) throw std::invalid_argument("rho must be finite and >= 0");
    if (rho >= 1.0) throw std::invalid_argument("rho must be < 1 (weak-drive expansion)");
    if (!std::isfinite(omega0_over_omega) || omega0_over_omega <= 0.0)
      throw std::invalid_argument("omega0_over_omega must be finite and > 0");
    if (!std::isfinite(gamma_fs) || gamma_fs <= 0.0) throw std::invalid_argument("gamma_fs must be finite and > 0");
    if (!std::isfinite(omega) || omega <= 0.0) throw std::invalid_argument("omega must be finite and > 0");
    if (n0 < 0 || n0 > 4096) throw std::invalid_argument("n0 must be in [0, 4096]");
    if (m0 < 0 || m0 > 4096) throw std::invalid_argument("m0 must be in [0, 4096]");
    if (!std::isfinite(phi)) throw std::invalid_argument("phi must be finite");
  }
};

// Symmetric truncation bound used for both indices of the double sums.
struct Truncation {
  int n_bar = 0;
  bool auto_selected = false;
  double achieved_tol = 0.0;  // measured change on the final doubling (auto only)
};

inline DriveMapping map_drive(double rho, double omega0_over_omega) {
  if (!std::isfinite(rho) || rho < 0.0) throw std::invalid_argument("rho must be finite and >= 0");
  if (rho >= 1.0) throw std::invalid_argument("rho must be < 1 (weak-drive expansion)");
  if (!std::isfinite(omega0_over_omega) || omega0_over_omega <= 0.0)
    throw std::invalid_argument("omega0_over_omega must be finite and > 0");
  DriveMapping m;
  const double r2 = rho * rho;
  m.b_over_omega = omega0_over_omega * r2 / 4.0;
  m.b_prime_over_omega = omega0_over_omega * r2 * r2 / 192.0;
  m.chi = m.b_over_omega / 2.0;
  m.chi_prime = m.b_prime_over_omega / 4.0;
  m.omega0_shift_factor = 1.0 - r2 / 4.0;
  return m;
}

}  // namespace qmod
