#include "fragrad/units.hpp"

#include <cmath>

#include "fragrad/errors.hpp"

namespace fragrad {

Energy damping_from_lifetime(Time tau) {
  const double t = tau.inverse_mev();
  if (!std::isfinite(t) || t <= 0.0) {
    throw DomainError("lifetime must be finite and positive");
  }
  return Energy::mev(1.0 / t);
}

Time lifetime_from_damping(Energy gamma) {
  const double g = gamma.value();
  if (!std::isfinite(g) || g <= 0.0) {
    throw DomainError("damping width must be finite and positive");
  }
  return Time::inverse_mev(1.0 / g);
}

}  // namespace fragrad
