#include "fragrad/shape.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fragrad/errors.hpp"

namespace fragrad {

namespace {

void check_amplitude(double beta, const char* name) {
  if (!std::isfinite(beta) || std::abs(beta) >= 2.0) {
    throw DomainError(std::string(name) + " outside |beta| < 2");
  }
}

}  // namespace

Deformation::Deformation(double b0, double b1, double b2, double b3, Length radius)
    : beta0(b0), beta1(b1), beta2(b2), beta3(b3), r0(radius) {
  if (!std::isfinite(beta0)) throw DomainError("beta0 must be finite");
  check_amplitude(beta1, "beta1");
  check_amplitude(beta2, "beta2");
  check_amplitude(beta3, "beta3");
  if (!(r0.value() > 0.0) || !std::isfinite(r0.value())) {
    throw DomainError("R0 must be finite and positive");
  }
}

Deformation Deformation::constrained(double b0, double b2, double b3, Length radius) {
  return Deformation(b0, constrained_beta1(b2, b3), b2, b3, radius);
}

Polarizability::Polarizability(Length kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa.value()) || kappa.value() <= 0.0) {
    throw DomainError("polarizability kappa must be finite and positive");
  }
}

double legendre_harmonic(int lambda, double cos_theta) {
  if (std::abs(cos_theta) > 1.0 || std::isnan(cos_theta)) {
    throw DomainError("cos(theta) outside [-1, 1]");
  }
  const double x = cos_theta;
  double p = 0.0;
  switch (lambda) {
    case 0: p = 1.0; break;
    case 1: p = x; break;
    case 2: p = 0.5 * (3.0 * x * x - 1.0); break;
    case 3: p = 0.5 * x * (5.0 * x * x - 3.0); break;
    default: throw DomainError("multipole order must be in [0, 3]");
  }
  return std::sqrt((2.0 * lambda + 1.0) / (4.0 * std::numbers::pi)) * p;
}

Length shape_radius(const Deformation& def, double cos_theta) {
  const double sum = def.beta1 * legendre_harmonic(1, cos_theta) +
                     def.beta2 * legendre_harmonic(2, cos_theta) +
                     def.beta3 * legendre_harmonic(3, cos_theta);
  const double r = def.r0.value() * (1.0 + def.beta0 + sum);
  if (!(r > 0.0)) throw DomainError("degenerate shape: non-positive radius");
  return Length::fm(r);
}

double constrained_beta1(double beta2, double beta3) {
  return kCenterOfMassCoefficient * beta2 * beta3;
}

DipoleMoment dipole_moment(const Polarizability& kappa, double beta2, double beta3) {
  return DipoleMoment::e_fm(-kappa.kappa().value() * beta2 * beta3);
}

Polarizability kappa_from_d0(Length d0, double beta2_0, double beta3_0) {
  const double product = beta2_0 * beta3_0;
  if (product == 0.0 || !std::isfinite(product)) {
    throw DomainError("kappa from d0 needs a nonzero beta2 * beta3");
  }
  return Polarizability(Length::fm(d0.value() / product));
}

}  // namespace fragrad
