#include "fragrad/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "fragrad/errors.hpp"
#include "fragrad/quadrature.hpp"

namespace fragrad {

namespace {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

// dE/d(hw) = kDensityScale * |F|^2 with F in e fm MeV.
constexpr double kDensityScale = 2.0 / (3.0 * std::numbers::pi) * PhysConstants::alpha_em /
                                 (PhysConstants::hbar_c * PhysConstants::hbar_c);

// Larmor energy (MeV) = kLarmorScale * int d''^2 dt with d'' in fm MeV^2, t in MeV^-1.
constexpr double kLarmorScale =
    2.0 / 3.0 * PhysConstants::alpha_em / (PhysConstants::hbar_c * PhysConstants::hbar_c);

// Frequency-integral tolerances and budget.
constexpr quad::Options kFrequencyQuadrature{0.0, 1e-8, 1'000'000};
// The time-domain signal holds up to ~3e4 carrier periods at gamma / Sigma = 1e-4,
// which needs more than 1e6 evaluations at this rule order.
constexpr quad::Options kTimeQuadrature{0.0, 1e-8, 4'000'000};

// D(t) = sum_k c_k exp(-p_k t).
struct Pole {
  cplx weight;
  cplx rate;
};

std::array<Pole, 2> term_poles(const FragmentParams& params, DipoleTerm term) {
  const double a = 0.5 * params.total_gamma().value();
  const double d0 = params.d0().value();
  const double w = term == DipoleTerm::Difference ? params.delta().value() : params.sigma().value();
  const double c = (term == DipoleTerm::Difference ? 0.25 : -0.25) * d0;
  return {Pole{c, cplx(a, -w)}, Pole{c, cplx(a, w)}};
}

void check_inputs(const FragmentParams& params, Energy hw) {
  params.validate_for_spectrum();
  if (!(hw.value() >= 0.0) || !std::isfinite(hw.value())) {
    throw DomainError("photon energy must be finite and non-negative");
  }
}

std::string format_diagnostics(const char* what, const quad::Result& r) {
  std::ostringstream os;
  os << what << " did not converge: value " << r.value << ", error estimate " << r.error
     << " after " << r.evaluations << " evaluations on " << r.panels << " panels";
  return os.str();
}

std::vector<double> resonance_edges(const FragmentParams& params, double lo, double hi) {
  static constexpr std::array<double, 11> offsets = {-64, -16, -4, -1, -0.25, 0,
                                                     0.25, 1, 4, 16, 64};
  const double g = params.total_gamma().value();
  std::vector<double> points;
  for (const double centre : {params.delta().value(), params.sigma().value()}) {
    for (const double k : offsets) points.push_back(centre + k * g);
  }
  return quad::make_edges(lo, hi, std::move(points));
}

template <class F>
double integrate_frequency(const FragmentParams& params, double lo, double hi, F&& f,
                           const char* what) {
  params.validate_for_spectrum();
  if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("integration limits must satisfy 0 <= lo < hi");
  std::vector<double> edges;
  if (hi == kInf) {
    // Finite part up to a few Sigma, then the mapped tail.
    const double split = std::max(4.0 * params.sigma().value(), 2.0 * lo);
    edges = resonance_edges(params, lo, split);
    edges.push_back(kInf);
  } else {
    edges = resonance_edges(params, lo, hi);
  }
  const auto r = quad::integrate(f, edges, kFrequencyQuadrature);
  if (!r.converged) throw NumericError(format_diagnostics(what, r));
  return r.value;
}

}  // namespace

std::string_view to_string(AmplitudeMode mode) {
  return mode == AmplitudeMode::PaperPole ? "paper" : "exact";
}

std::optional<AmplitudeMode> parse_amplitude_mode(std::string_view text) {
  if (text == "exact") return AmplitudeMode::ExactClosedForm;
  if (text == "paper") return AmplitudeMode::PaperPole;
  return std::nullopt;
}

std::complex<double> fourier_accel_exact(const FragmentParams& params, Energy hw) {
  check_inputs(params, hw);
  const double w = hw.value();
  const cplx iw(0.0, w);
  std::array<Pole, 4> poles{};
  const auto diff = term_poles(params, DipoleTerm::Difference);
  const auto sum = term_poles(params, DipoleTerm::Sum);
  std::copy(diff.begin(), diff.end(), poles.begin());
  std::copy(sum.begin(), sum.end(), poles.begin() + 2);

  // D(0) = D'(0) = 0, so FT[D''] = -w^2 FT[D] = sum_k c_k p_k^2 / (p_k - iw).
  // The first form is exact at w = 0; the second avoids cancellation at large w.
  cplx total = 0.0;
  if (w < params.sigma().value()) {
    for (const auto& p : poles) total += p.weight / (p.rate - iw);
    return -w * w * total;
  }
  for (const auto& p : poles) total += p.weight * p.rate * p.rate / (p.rate - iw);
  return total;
}

std::complex<double> fourier_accel_paper(const FragmentParams& params, Energy hw) {
  check_inputs(params, hw);
  const double sigma = params.sigma().value();
  const cplx i(0.0, 1.0);
  const cplx denom(hw.value() - sigma, 0.5 * params.total_gamma().value());
  return i * params.d0().value() * sigma * sigma / denom;
}

std::complex<double> fourier_accel_term(const FragmentParams& params, DipoleTerm term, Energy hw) {
  check_inputs(params, hw);
  const cplx iw(0.0, hw.value());
  cplx total = 0.0;
  for (const auto& p : term_poles(params, term)) {
    total += p.weight * p.rate * p.rate / (p.rate - iw);
  }
  return total;
}

std::complex<double> fourier_accel(const FragmentParams& params, Energy hw, AmplitudeMode mode) {
  return mode == AmplitudeMode::PaperPole ? fourier_accel_paper(params, hw)
                                          : fourier_accel_exact(params, hw);
}

SpectralAmplitude sample_amplitude(const FragmentParams& params, std::span<const double> hw_mev,
                                   AmplitudeMode mode) {
  SpectralAmplitude amp;
  amp.mode = mode;
  amp.hw_mev.assign(hw_mev.begin(), hw_mev.end());
  amp.value.reserve(hw_mev.size());
  for (std::size_t i = 0; i < hw_mev.size(); ++i) {
    if (!(hw_mev[i] >= 0.0) || (i > 0 && !(hw_mev[i] > hw_mev[i - 1]))) {
      throw DomainError("amplitude grid must be non-negative and strictly increasing");
    }
    amp.value.push_back(fourier_accel(params, Energy::mev(hw_mev[i]), mode));
  }
  return amp;
}

double spectral_density(std::complex<double> amplitude) {
  return kDensityScale * std::norm(amplitude);
}

std::vector<double> spectral_density(const SpectralAmplitude& amp) {
  std::vector<double> out;
  out.reserve(amp.value.size());
  for (const auto& v : amp.value) out.push_back(spectral_density(v));
  return out;
}

double lower_limit_mev(const GridSpec& grid, AmplitudeMode mode) {
  return mode == AmplitudeMode::PaperPole ? grid.ir_cutoff_mev : 0.0;
}

std::vector<double> build_grid(const FragmentParams& params, const GridSpec& grid,
                               AmplitudeMode mode) {
  params.validate_for_spectrum();
  const double sigma = params.sigma().value();
  const double gamma = params.total_gamma().value();
  const double lo = lower_limit_mev(grid, mode);
  const double hi = grid.hw_max_mev.value_or(4.0 * sigma);
  if (!(hi >= 1.5 * sigma)) throw ConfigError("hw_max_mev", "must be at least 1.5 * (hw2 + hw3)");
  if (!(lo >= 0.0) || !(lo < hi)) throw ConfigError("ir_cutoff_mev", "must lie in [0, hw_max)");
  if (grid.points < 2) throw ConfigError("points", "need at least two grid points");

  std::vector<double> hw;
  hw.reserve(grid.points);
  const double step = (hi - lo) / static_cast<double>(grid.points - 1);
  for (std::size_t i = 0; i < grid.points; ++i) hw.push_back(lo + step * static_cast<double>(i));
  hw.back() = hi;

  const std::array<double, 2> centres = {params.delta().value(), sigma};
  if (grid.refine) {
    const double fine = gamma / static_cast<double>(std::max<std::size_t>(grid.points_per_fwhm, 1));
    const auto half_count = static_cast<long long>(std::ceil(grid.window_fwhm * gamma / fine));
    if (2.0 * static_cast<double>(half_count) * 2.0 + static_cast<double>(hw.size()) >
        static_cast<double>(grid.max_points)) {
      throw ConfigError("grid", "refinement exceeds the point cap");
    }
    for (const double c : centres) {
      for (long long j = -half_count; j <= half_count; ++j) {
        const double x = c + static_cast<double>(j) * fine;
        if (x >= lo && x <= hi) hw.push_back(x);
      }
    }
  }
  std::sort(hw.begin(), hw.end());
  // Drop points closer than a relative 1e-12 so the grid stays strictly increasing.
  std::vector<double> unique;
  unique.reserve(hw.size());
  for (const double x : hw) {
    if (unique.empty() || x - unique.back() > 1e-12 * std::max(1.0, x)) unique.push_back(x);
  }
  if (unique.size() > grid.max_points) throw ConfigError("grid", "grid exceeds the point cap");

  // Each resolvable line needs >= 30 points across its FWHM.
  for (const double c : centres) {
    const double a = c - 0.5 * gamma;
    const double b = c + 0.5 * gamma;
    if (a < lo || b > hi) continue;
    const auto n = std::upper_bound(unique.begin(), unique.end(), b) -
                   std::lower_bound(unique.begin(), unique.end(), a);
    if (n < 30) {
      throw ConfigError("grid", "too coarse: fewer than 30 points across a resonance width");
    }
  }
  return unique;
}

Energy radiated_energy(const FragmentParams& params, AmplitudeMode mode, double lo_mev,
                       double hi_mev) {
  params.validate_for_spectrum();
  if (params.d0().value() == 0.0) return Energy::mev(0.0);
  auto density = [&](double w) {
    return spectral_density(fourier_accel(params, Energy::mev(w), mode));
  };
  return Energy::mev(integrate_frequency(params, lo_mev, hi_mev, density, "energy integral"));
}

double photon_count(const FragmentParams& params, AmplitudeMode mode, double lo_mev,
                    double hi_mev) {
  params.validate_for_spectrum();
  if (params.d0().value() == 0.0) return 0.0;
  auto integrand = [&](double w) {
    return spectral_density(fourier_accel(params, Energy::mev(w), mode)) / w;
  };
  return integrate_frequency(params, lo_mev, hi_mev, integrand, "photon-yield integral");
}

Energy term_energy(const FragmentParams& params, DipoleTerm term) {
  params.validate_for_spectrum();
  if (params.d0().value() == 0.0) return Energy::mev(0.0);
  auto density = [&](double w) {
    return spectral_density(fourier_accel_term(params, term, Energy::mev(w)));
  };
  return Energy::mev(integrate_frequency(params, 0.0, kInf, density, "term energy integral"));
}

Energy total_energy_time_domain(const FragmentParams& params) {
  params.validate_for_spectrum();
  const double d0 = params.d0().value();
  if (d0 == 0.0) return Energy::mev(0.0);

  const DipoleDecomposition dec = decompose(params);
  const double gamma = params.total_gamma().value();
  const double a = dec.half_gamma.value();
  const double sigma = dec.sigma.value();
  const double delta = dec.delta.value();
  // |D''(t)| <= bound * exp(-a t).
  const double bound = 0.5 * std::abs(d0) * ((a * a + delta * delta) + (a * a + sigma * sigma));
  // Half a carrier period per panel keeps the 10-point Gauss estimate honest.
  const double panel = std::min(std::numbers::pi / sigma, 1.0 / gamma);

  auto integrand = [&](double t) {
    const double acc = dec.acceleration(Time::inverse_mev(t));
    return acc * acc;
  };

  double total = 0.0;
  double start = 0.0;
  double end = 25.0 / gamma;
  std::size_t budget = kTimeQuadrature.max_evaluations;
  for (;;) {
    const auto count = static_cast<std::size_t>(std::ceil((end - start) / panel));
    std::vector<double> edges(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
      edges[i] = start + (end - start) * static_cast<double>(i) / static_cast<double>(count);
    }
    quad::Options opts = kTimeQuadrature;
    opts.max_evaluations = budget;
    const auto r = quad::integrate(integrand, edges, opts);
    if (!r.converged) throw NumericError(format_diagnostics("time-domain energy", r));
    total += r.value;
    budget -= std::min(budget, r.evaluations);

    const double tail = bound * bound * std::exp(-gamma * end) / gamma;
    if (tail <= 1e-2 * kTimeQuadrature.rel_tol * total) break;
    if (budget == 0) {
      throw NumericError("time-domain energy: evaluation budget exhausted before the tail decayed");
    }
    start = end;
    end += 5.0 / gamma;
  }
  return Energy::mev(kLarmorScale * total);
}

double photon_yield(const Spectrum& spectrum) {
  return photon_count(spectrum.params, spectrum.mode, spectrum.lower_limit_mev, kInf);
}

Spectrum build_spectrum(const FragmentParams& params, const GridSpec& grid, AmplitudeMode mode) {
  Spectrum s;
  s.mode = mode;
  s.params = params;
  s.lower_limit_mev = lower_limit_mev(grid, mode);
  const auto hw = build_grid(params, grid, mode);
  const auto amp = sample_amplitude(params, hw, mode);
  const auto density = spectral_density(amp);
  s.points.reserve(hw.size());
  for (std::size_t i = 0; i < hw.size(); ++i) {
    const double dn = hw[i] > 0.0 ? density[i] / hw[i] : 0.0;
    s.points.push_back({hw[i], density[i], dn});
  }
  s.e_total = radiated_energy(params, mode, 0.0, kInf);
  s.n_gamma = photon_yield(s);
  return s;
}

PeakInfo locate_peak(const Spectrum& spectrum) {
  PeakInfo info;
  const auto& pts = spectrum.points;
  if (pts.empty()) return info;
  const auto it = std::max_element(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    return x.de_dhw < y.de_dhw;
  });
  const auto k = static_cast<std::size_t>(it - pts.begin());
  info.hw_mev = it->hw_mev;
  info.height = it->de_dhw;
  const double left_step = k > 0 ? pts[k].hw_mev - pts[k - 1].hw_mev : 0.0;
  const double right_step = k + 1 < pts.size() ? pts[k + 1].hw_mev - pts[k].hw_mev : 0.0;
  info.grid_step_mev = std::max(left_step, right_step);

  const double half = 0.5 * info.height;
  if (!(half > 0.0)) {
    info.fwhm_mev = std::numeric_limits<double>::quiet_NaN();
    return info;
  }
  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const auto& p = pts[inside];
    const auto& q = pts[outside];
    const double f = (p.de_dhw - half) / (p.de_dhw - q.de_dhw);
    return p.hw_mev + f * (q.hw_mev - p.hw_mev);
  };
  double left = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = k; i > 0; --i) {
    if (pts[i - 1].de_dhw < half) {
      left = crossing(i, i - 1);
      break;
    }
  }
  double right = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = k; i + 1 < pts.size(); ++i) {
    if (pts[i + 1].de_dhw < half) {
      right = crossing(i, i + 1);
      break;
    }
  }
  info.fwhm_mev = right - left;
  return info;
}

}  // namespace fragrad
