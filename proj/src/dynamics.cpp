#include "fragrad/dynamics.hpp"

#include <cmath>

#include "fragrad/errors.hpp"

namespace fragrad {

namespace {

void check_time(Time t) {
  if (!(t.inverse_mev() >= 0.0) || !std::isfinite(t.inverse_mev())) {
    throw DomainError("signals are defined for t >= 0 only");
  }
}

struct DampedCosine {
  double amplitude;
  double omega;
  double rate;

  // f = A e^{-a t} cos(w t) and its first two derivatives.
  [[nodiscard]] double value(double t) const {
    return amplitude * std::exp(-rate * t) * std::cos(omega * t);
  }
  [[nodiscard]] double first(double t) const {
    return -amplitude * std::exp(-rate * t) *
           (rate * std::cos(omega * t) + omega * std::sin(omega * t));
  }
  [[nodiscard]] double second(double t) const {
    return amplitude * std::exp(-rate * t) *
           ((rate * rate - omega * omega) * std::cos(omega * t) +
            2.0 * rate * omega * std::sin(omega * t));
  }
};

}  // namespace

void FragmentParams::validate() const {
  if (!(hw2.value() > 0.0) || !(hw3.value() > 0.0) || !std::isfinite(hw2.value()) ||
      !std::isfinite(hw3.value())) {
    throw DomainError("mode energies must be finite and positive");
  }
  if (!(gamma2.value() >= 0.0) || !(gamma3.value() >= 0.0) ||
      !std::isfinite(gamma2.value()) || !std::isfinite(gamma3.value())) {
    throw DomainError("mode widths must be finite and non-negative");
  }
  if (!std::isfinite(beta2_0) || !std::isfinite(beta3_0)) {
    throw DomainError("initial amplitudes must be finite");
  }
}

void FragmentParams::validate_for_spectrum() const {
  validate();
  if (!(total_gamma().value() > 0.0)) {
    throw DomainError("total width must be positive; the spectral integrals diverge otherwise");
  }
}

Energy FragmentParams::delta() const { return Energy::mev(std::abs(hw2.value() - hw3.value())); }

bool FragmentParams::broad_resonance() const {
  return total_gamma().value() > kNarrowResonanceLimit * sigma().value();
}

FragmentParams reference_fragment() {
  FragmentParams p;
  p.hw2 = Energy::mev(2.2);
  p.hw3 = Energy::mev(2.8);
  p.beta2_0 = 0.7;
  p.beta3_0 = 0.7;
  const Energy gamma = damping_from_lifetime(Time::seconds(1e-19));
  p.gamma2 = gamma / 2.0;
  p.gamma3 = gamma / 2.0;
  p.kappa = kappa_from_d0(Length::fm(5.0), p.beta2_0, p.beta3_0);
  return p;
}

DipoleDecomposition decompose(const FragmentParams& params) {
  params.validate();
  return {params.d0(), params.sigma(), params.delta(), params.total_gamma() / 2.0};
}

namespace {

DampedCosine difference_term(const DipoleDecomposition& dec) {
  return {0.5 * dec.d0.value(), dec.delta.value(), dec.half_gamma.value()};
}
DampedCosine sum_term(const DipoleDecomposition& dec) {
  return {-0.5 * dec.d0.value(), dec.sigma.value(), dec.half_gamma.value()};
}

}  // namespace

double DipoleDecomposition::dipole(Time t) const {
  const double s = t.inverse_mev();
  return difference_term(*this).value(s) + sum_term(*this).value(s);
}

double DipoleDecomposition::velocity(Time t) const {
  const double s = t.inverse_mev();
  return difference_term(*this).first(s) + sum_term(*this).first(s);
}

double DipoleDecomposition::acceleration(Time t) const {
  const double s = t.inverse_mev();
  return difference_term(*this).second(s) + sum_term(*this).second(s);
}

double beta_t(const FragmentParams& params, int mode, Time t) {
  check_time(t);
  const double s = t.inverse_mev();
  switch (mode) {
    case 2:
      return params.beta2_0 * std::sin(params.hw2.value() * s) *
             std::exp(-0.5 * params.gamma2.value() * s);
    case 3:
      return params.beta3_0 * std::sin(params.hw3.value() * s) *
             std::exp(-0.5 * params.gamma3.value() * s);
    default:
      throw DomainError("vibration mode must be 2 or 3");
  }
}

DipoleMoment dipole_t(const FragmentParams& params, Time t) {
  return dipole_moment(params.kappa, beta_t(params, 2, t), beta_t(params, 3, t));
}

double dipole_accel_t(const FragmentParams& params, Time t) {
  check_time(t);
  return decompose(params).acceleration(t);
}

}  // namespace fragrad
