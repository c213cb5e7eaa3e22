#pragma once

// Damped surface vibrations after neck rupture and the dipole they induce.
//
//   beta_i(t) = beta_i0 sin(w_i t) exp(-g_i t / 2),   i = 2, 3
//   D(t)      = -kappa beta_2(t) beta_3(t)
//             = (D0 / 2) [cos(Delta t) - cos(Sigma t)] exp(-g t / 2)
//
// with D0 = -kappa beta_20 beta_30, Sigma = w2 + w3, Delta = |w2 - w3| and
// g = g2 + g3. All signals are one-sided (t >= 0).

#include "fragrad/shape.hpp"
#include "fragrad/units.hpp"

namespace fragrad {

/// Physical inputs for one fragment.
struct FragmentParams {
  Energy hw2;
  Energy hw3;
  double beta2_0 = 0.0;
  double beta3_0 = 0.0;
  Energy gamma2;
  Energy gamma3;
  Polarizability kappa{Length::fm(1.0)};

  /// Throws DomainError on hw <= 0 or a negative width.
  void validate() const;
  /// validate() plus a strictly positive total width, needed by every spectral integral.
  void validate_for_spectrum() const;

  [[nodiscard]] Energy total_gamma() const { return gamma2 + gamma3; }
  [[nodiscard]] Energy sigma() const { return hw2 + hw3; }
  [[nodiscard]] Energy delta() const;
  [[nodiscard]] DipoleMoment d0() const { return dipole_moment(kappa, beta2_0, beta3_0); }

  /// True when the total width is no longer small against Sigma
  /// (gamma > kNarrowResonanceLimit * Sigma).
  [[nodiscard]] bool broad_resonance() const;
};

inline constexpr double kNarrowResonanceLimit = 0.1;

/// Reference fragment: 140Xe with hw2 = 2.2 MeV, hw3 = 2.8 MeV,
/// beta0 = 0.7 / 0.7, |d0| = 5 fm and tau = 1e-19 s split equally between modes.
FragmentParams reference_fragment();

/// The two damped cosines D(t) is made of.
struct DipoleDecomposition {
  DipoleMoment d0;
  Energy sigma;
  Energy delta;
  Energy half_gamma;

  [[nodiscard]] double dipole(Time t) const;        // e fm
  [[nodiscard]] double velocity(Time t) const;      // e fm MeV
  [[nodiscard]] double acceleration(Time t) const;  // e fm MeV^2
};

DipoleDecomposition decompose(const FragmentParams& params);

/// beta_mode(t) for mode 2 or 3. Throws DomainError for t < 0 or another mode.
double beta_t(const FragmentParams& params, int mode, Time t);

/// D(t) from the product of the two mode amplitudes.
DipoleMoment dipole_t(const FragmentParams& params, Time t);

/// Exact second derivative of D(t), in e fm MeV^2.
double dipole_accel_t(const FragmentParams& params, Time t);

}  // namespace fragrad
