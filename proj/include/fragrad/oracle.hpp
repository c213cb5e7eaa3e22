#pragma once

// Brute-force cross-checks for the closed-form spectrum.
//
// Everything here integrates the time signal directly on fixed Gauss-Legendre
// panels and differentiates the sine product with the product rule. Nothing
// calls into the pole formulas of spectrum.hpp; run_validation_suite is the
// only place where the two routes meet.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "fragrad/dynamics.hpp"
#include "fragrad/units.hpp"

namespace fragrad::oracle {

struct NumericTransform {
  std::complex<double> value;  // e fm MeV
  /// Bound on |int_{t_max}^inf e^{iwt} D''(t) dt|.
  double truncation_bound = 0.0;
  /// Set when the truncation bound exceeds 1e-8 of |value|.
  bool short_window = false;
  std::size_t panels = 0;
};

/// int_0^{t_max} e^{iwt} D''(t) dt with t_max = t_max_factor / gamma and panels no
/// longer than panel_fraction of the shortest period among w, Delta, Sigma.
/// Throws DomainError for gamma <= 0 or t_max_factor < 20.
NumericTransform numeric_fourier_accel(const FragmentParams& params, Energy hw,
                                       double t_max_factor = 60.0,
                                       double panel_fraction = 1.0 / 8.0);

/// Larmor energy (2/3) e^2 int d''^2 dt on a fixed panel grid.
Energy numeric_time_energy(const FragmentParams& params, double t_max_factor = 60.0,
                           double panel_fraction = 1.0 / 8.0);

/// Larmor energy of one damped cosine A e^{-at} cos(wt), integrated in closed form.
Energy damped_cosine_energy(DipoleMoment amplitude, Energy omega, Energy half_gamma);

/// Second derivative of D(t) = D0 sin(w2 t) sin(w3 t) exp(-g t / 2) by the product rule.
double product_rule_accel(const FragmentParams& params, double t_inverse_mev);

struct OracleReport {
  std::string check_name;
  double reference_value = 0.0;
  double test_value = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Informational row: the check does not apply or flags a questionable input.
  bool warning = false;
  std::string note;
};

/// Relative error, or absolute below a reference magnitude of 1e-12.
OracleReport make_report(std::string name, double reference, double test, double tolerance,
                         std::string note = {});

/// Runs every dynamics and spectrum cross-check. Never throws on a failed
/// check; failures come back as rows with passed == false. Row order is fixed.
std::vector<OracleReport> run_validation_suite(const FragmentParams& params);

}  // namespace fragrad::oracle
