#pragma once

// Frequency-domain radiation from the fragment dipole.
//
// The one-sided transform  F(w) = int_0^inf e^{iwt} D''(t) dt  is evaluated in
// closed form. The radiated spectral density is normalized so that its
// frequency integral reproduces the time-domain Larmor energy
// (2/3) e^2 int_0^inf d''(t)^2 dt exactly:
//
//   dE/d(hw) = 2 / (3 pi) * alpha * |F(w)|^2 / (hbar c)^2      [per MeV]
//
// with F in e fm MeV. Photon yield is int dE/d(hw) / (hw) d(hw).

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fragrad/dynamics.hpp"
#include "fragrad/units.hpp"

namespace fragrad {

enum class AmplitudeMode {
  /// i D0 Sigma^2 / (w - Sigma + i gamma/2): single pole at the sum frequency.
  PaperPole,
  /// All four poles of the damped product, transformed exactly.
  ExactClosedForm,
};

std::string_view to_string(AmplitudeMode mode);
/// Accepts "exact" and "paper". Returns nullopt otherwise.
std::optional<AmplitudeMode> parse_amplitude_mode(std::string_view text);

/// The two damped cosines of D(t): one at Delta = |w2 - w3|, one at Sigma = w2 + w3.
enum class DipoleTerm { Difference, Sum };

/// Closed-form transform of D''. Throws DomainError unless gamma > 0 and hw >= 0.
std::complex<double> fourier_accel_exact(const FragmentParams& params, Energy hw);

/// Single-pole expression, no correction factors.
std::complex<double> fourier_accel_paper(const FragmentParams& params, Energy hw);

/// Transform of the second derivative of one damped cosine of D(t) alone.
std::complex<double> fourier_accel_term(const FragmentParams& params, DipoleTerm term, Energy hw);

std::complex<double> fourier_accel(const FragmentParams& params, Energy hw, AmplitudeMode mode);

/// F(w) sampled on an energy grid.
struct SpectralAmplitude {
  AmplitudeMode mode = AmplitudeMode::ExactClosedForm;
  std::vector<double> hw_mev;
  std::vector<std::complex<double>> value;  // e fm MeV
};

/// Throws DomainError if the grid is not strictly increasing and non-negative.
SpectralAmplitude sample_amplitude(const FragmentParams& params, std::span<const double> hw_mev,
                                   AmplitudeMode mode);

/// Radiated energy per unit photon energy for one amplitude value.
double spectral_density(std::complex<double> amplitude);
std::vector<double> spectral_density(const SpectralAmplitude& amp);

struct GridSpec {
  /// Upper end of the emitted grid. Defaults to 4 Sigma.
  std::optional<double> hw_max_mev;
  /// Uniform base points on [hw_min, hw_max].
  std::size_t points = 2001;
  /// Add dense points around Delta and Sigma.
  bool refine = true;
  /// Lower end for the single-pole mode, whose yield integrand diverges at zero.
  double ir_cutoff_mev = 1e-3;
  /// Refined spacing is gamma / points_per_fwhm over Sigma +- window_fwhm * gamma.
  std::size_t points_per_fwhm = 40;
  double window_fwhm = 20.0;
  std::size_t max_points = 2'000'000;
};

/// Lower integration / grid limit for a mode: 0 for the exact transform,
/// ir_cutoff_mev for the single-pole form.
double lower_limit_mev(const GridSpec& grid, AmplitudeMode mode);

/// Energy grid with every resonance FWHM holding at least 30 points.
/// Throws ConfigError when that cannot be met within max_points.
std::vector<double> build_grid(const FragmentParams& params, const GridSpec& grid,
                               AmplitudeMode mode);

struct SpectrumPoint {
  double hw_mev;
  double de_dhw;  // per MeV
  double dn_dhw;  // photons per MeV
};

struct Spectrum {
  AmplitudeMode mode = AmplitudeMode::ExactClosedForm;
  FragmentParams params;
  double lower_limit_mev = 0.0;
  std::vector<SpectrumPoint> points;
  Energy e_total;
  double n_gamma = 0.0;
};

/// Integral of dE/d(hw) over [lo, hi]; hi may be +infinity.
Energy radiated_energy(const FragmentParams& params, AmplitudeMode mode, double lo_mev,
                       double hi_mev);
/// Integral of dE/d(hw) / hw over [lo, hi]; hi may be +infinity.
double photon_count(const FragmentParams& params, AmplitudeMode mode, double lo_mev,
                    double hi_mev);

/// Energy radiated by one damped cosine of D(t) on its own, over all frequencies.
Energy term_energy(const FragmentParams& params, DipoleTerm term);

/// Larmor energy (2/3) e^2 int_0^inf d''(t)^2 dt by adaptive quadrature of the
/// analytic D''(t). Throws NumericError if the quadrature does not converge.
Energy total_energy_time_domain(const FragmentParams& params);

/// Photons per fission for a built spectrum, integrated from its lower limit to infinity.
double photon_yield(const Spectrum& spectrum);

Spectrum build_spectrum(const FragmentParams& params, const GridSpec& grid = {},
                        AmplitudeMode mode = AmplitudeMode::ExactClosedForm);

struct PeakInfo {
  double hw_mev = 0.0;
  double height = 0.0;
  /// Linear-interpolated full width at half maximum; NaN if a side never drops below half.
  double fwhm_mev = 0.0;
  /// Spacing of the grid around the peak.
  double grid_step_mev = 0.0;
};

PeakInfo locate_peak(const Spectrum& spectrum);

}  // namespace fragrad
