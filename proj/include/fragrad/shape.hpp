#pragma once

// Axially symmetric surface parametrization of a fragment and the
// polarization dipole carried by a pear-shaped (beta2 * beta3 != 0) nucleus.

#include "fragrad/units.hpp"

namespace fragrad {

/// Coefficient of the dipole shift that keeps the centre of mass fixed:
/// beta1 = kCenterOfMassCoefficient * beta2 * beta3.
inline constexpr double kCenterOfMassCoefficient = -0.743;

/// mu = 0 deformation amplitudes up to octupole order.
struct Deformation {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  Length r0 = Length::fm(1.0);

  /// Validates |beta_l| < 2 for l = 1..3 and r0 > 0.
  Deformation(double beta0, double beta1, double beta2, double beta3, Length r0);

  /// beta1 fixed by the centre-of-mass condition.
  static Deformation constrained(double beta0, double beta2, double beta3, Length r0);
};

/// Polarizability kappa (fm) linking beta2 * beta3 to the dipole moment.
class Polarizability {
 public:
  /// Throws DomainError unless kappa is finite and positive.
  explicit Polarizability(Length kappa);

  [[nodiscard]] Length kappa() const { return kappa_; }

 private:
  Length kappa_;
};

/// Real axially symmetric harmonic Y_{l0} = sqrt((2l+1)/4pi) P_l(cos theta), 0 <= l <= 3.
double legendre_harmonic(int lambda, double cos_theta);

/// R(theta) = R0 (1 + beta0 + sum_l beta_l Y_l0(theta)). Throws DomainError
/// for a non-positive radius.
Length shape_radius(const Deformation& def, double cos_theta);

double constrained_beta1(double beta2, double beta3);

/// d = -kappa beta2 beta3.
DipoleMoment dipole_moment(const Polarizability& kappa, double beta2, double beta3);

/// kappa reproducing a dipole of magnitude d0 at the given initial amplitudes.
Polarizability kappa_from_d0(Length d0, double beta2_0, double beta3_0);

}  // namespace fragrad
