#pragma once

// Physical quantities used throughout fragrad.
//
// Internally everything runs in natural units (hbar = c = 1): energies and
// frequencies in MeV, times in MeV^-1, lengths in fm, charges in units of e.
// Conversions to seconds happen only at the boundary, through Time.

#include <compare>

namespace fragrad {

/// CODATA-2018 values. Fixed in source so acceptance numbers are reproducible.
struct PhysConstants {
  static constexpr double hbar_c = 197.3269804;        // MeV fm
  static constexpr double hbar = 6.582119569e-22;      // MeV s
  static constexpr double alpha_em = 7.2973525693e-3;  // dimensionless
  static constexpr double e_squared = alpha_em * hbar_c;  // MeV fm
};

namespace units {

/// Scalar tagged with a unit. Only same-unit arithmetic is allowed; anything
/// else has to go through value() explicitly.
template <class Tag>
class Quantity {
 public:
  constexpr Quantity() = default;

  [[nodiscard]] constexpr double value() const { return value_; }

  constexpr Quantity operator+(Quantity o) const { return Quantity(value_ + o.value_); }
  constexpr Quantity operator-(Quantity o) const { return Quantity(value_ - o.value_); }
  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity operator*(double s) const { return Quantity(value_ * s); }
  constexpr Quantity operator/(double s) const { return Quantity(value_ / s); }
  constexpr double operator/(Quantity o) const { return value_ / o.value_; }
  friend constexpr Quantity operator*(double s, Quantity q) { return q * s; }

  constexpr auto operator<=>(const Quantity&) const = default;

 protected:
  constexpr explicit Quantity(double v) : value_(v) {}

 private:
  double value_ = 0.0;
};

struct EnergyTag {};
struct TimeTag {};
struct LengthTag {};
struct DipoleTag {};

}  // namespace units

/// Energy in MeV. Also used for angular frequencies (hbar = 1).
class Energy : public units::Quantity<units::EnergyTag> {
 public:
  constexpr Energy() = default;
  constexpr Energy(units::Quantity<units::EnergyTag> q) : Quantity(q) {}
  static constexpr Energy mev(double v) { return Energy(v); }

 private:
  constexpr explicit Energy(double v) : Quantity(v) {}
};

/// Time, stored in MeV^-1.
class Time : public units::Quantity<units::TimeTag> {
 public:
  constexpr Time() = default;
  constexpr Time(units::Quantity<units::TimeTag> q) : Quantity(q) {}
  static constexpr Time inverse_mev(double v) { return Time(v); }
  static constexpr Time seconds(double s) { return Time(s / PhysConstants::hbar); }

  [[nodiscard]] constexpr double inverse_mev() const { return value(); }
  [[nodiscard]] constexpr double seconds() const { return value() * PhysConstants::hbar; }

 private:
  constexpr explicit Time(double v) : Quantity(v) {}
};

/// Length in fm.
class Length : public units::Quantity<units::LengthTag> {
 public:
  constexpr Length() = default;
  constexpr Length(units::Quantity<units::LengthTag> q) : Quantity(q) {}
  static constexpr Length fm(double v) { return Length(v); }

 private:
  constexpr explicit Length(double v) : Quantity(v) {}
};

/// Electric dipole moment in e fm. Signed.
class DipoleMoment : public units::Quantity<units::DipoleTag> {
 public:
  constexpr DipoleMoment() = default;
  constexpr DipoleMoment(units::Quantity<units::DipoleTag> q) : Quantity(q) {}
  static constexpr DipoleMoment e_fm(double v) { return DipoleMoment(v); }

 private:
  constexpr explicit DipoleMoment(double v) : Quantity(v) {}
};

/// Width of a level with the given lifetime: hbar / tau.
/// Throws DomainError unless tau is finite and positive.
Energy damping_from_lifetime(Time tau);

/// Inverse of damping_from_lifetime.
Time lifetime_from_damping(Energy gamma);

}  // namespace fragrad
