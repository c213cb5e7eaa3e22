#include "fragrad/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

#include "fragrad/errors.hpp"
#include "fragrad/spectrum.hpp"

namespace fragrad::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLarmor =
    2.0 / 3.0 * PhysConstants::alpha_em / (PhysConstants::hbar_c * PhysConstants::hbar_c);

// 10-point Gauss-Legendre rule on [-1, 1].
struct Rule {
  std::array<double, 10> nodes{};
  std::array<double, 10> weights{};
};

const Rule& legendre_rule() {
  static const Rule rule = [] {
    using gl = boost::math::quadrature::gauss<double, 10>;
    Rule r;
    const auto& x = gl::abscissa();
    const auto& w = gl::weights();
    for (std::size_t i = 0; i < 5; ++i) {
      r.nodes[2 * i] = -x[i];
      r.nodes[2 * i + 1] = x[i];
      r.weights[2 * i] = w[i];
      r.weights[2 * i + 1] = w[i];
    }
    return r;
  }();
  return rule;
}

// Sum of f over panels of width h covering [0, n h]. Panel sums are
// accumulated in index order.
template <class T, class F>
T fixed_panels(F&& f, double h, std::size_t n) {
  const Rule& rule = legendre_rule();
  T total{};
  for (std::size_t k = 0; k < n; ++k) {
    const double centre = (static_cast<double>(k) + 0.5) * h;
    T panel{};
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      panel += rule.weights[j] * f(centre + 0.5 * h * rule.nodes[j]);
    }
    total += 0.5 * h * panel;
  }
  return total;
}

void check_window(const FragmentParams& params, double t_max_factor, double panel_fraction) {
  params.validate_for_spectrum();
  if (!(t_max_factor >= 20.0)) throw DomainError("oracle window needs t_max_factor >= 20");
  if (!(panel_fraction > 0.0) || panel_fraction > 1.0) {
    throw DomainError("panel fraction must lie in (0, 1]");
  }
}

// |D''(t)| <= |D0| (w2 + w3 + g/2)^2 exp(-g t / 2).
double accel_bound(const FragmentParams& params) {
  const double a = 0.5 * params.total_gamma().value();
  const double s = params.hw2.value() + params.hw3.value() + a;
  return std::abs(params.d0().value()) * s * s;
}

}  // namespace

double product_rule_accel(const FragmentParams& params, double t) {
  const double w2 = params.hw2.value();
  const double w3 = params.hw3.value();
  const double a = 0.5 * params.total_gamma().value();
  const double u = std::sin(w2 * t);
  const double du = w2 * std::cos(w2 * t);
  const double ddu = -w2 * w2 * u;
  const double v = std::sin(w3 * t);
  const double dv = w3 * std::cos(w3 * t);
  const double ddv = -w3 * w3 * v;
  const double e = std::exp(-a * t);
  const double de = -a * e;
  const double dde = a * a * e;
  const double second = ddu * v * e + u * ddv * e + u * v * dde +
                        2.0 * (du * dv * e + du * v * de + u * dv * de);
  return params.d0().value() * second;
}

NumericTransform numeric_fourier_accel(const FragmentParams& params, Energy hw,
                                       double t_max_factor, double panel_fraction) {
  check_window(params, t_max_factor, panel_fraction);
  const double w = hw.value();
  if (!(w >= 0.0)) throw DomainError("photon energy must be non-negative");

  const double gamma = params.total_gamma().value();
  const double fastest = std::max({w, params.sigma().value(), params.delta().value()});
  const double t_max = t_max_factor / gamma;
  const auto n = static_cast<std::size_t>(std::ceil(t_max / (panel_fraction * kTwoPi / fastest)));
  const double h = t_max / static_cast<double>(n);

  NumericTransform out;
  out.panels = n;
  out.value = fixed_panels<std::complex<double>>(
      [&](double t) {
        return product_rule_accel(params, t) * std::complex<double>(std::cos(w * t), std::sin(w * t));
      },
      h, n);
  const double a = 0.5 * gamma;
  out.truncation_bound = accel_bound(params) * std::exp(-a * t_max) / a;
  out.short_window = out.truncation_bound > 1e-8 * std::abs(out.value);
  return out;
}

Energy numeric_time_energy(const FragmentParams& params, double t_max_factor,
                           double panel_fraction) {
  check_window(params, t_max_factor, panel_fraction);
  const double gamma = params.total_gamma().value();
  const double t_max = t_max_factor / gamma;
  const double period = kTwoPi / params.sigma().value();
  const auto n = static_cast<std::size_t>(std::ceil(t_max / (panel_fraction * period)));
  const double h = t_max / static_cast<double>(n);
  const double integral = fixed_panels<double>(
      [&](double t) {
        const double acc = product_rule_accel(params, t);
        return acc * acc;
      },
      h, n);
  return Energy::mev(kLarmor * integral);
}

Energy damped_cosine_energy(DipoleMoment amplitude, Energy omega, Energy half_gamma) {
  const double amp = amplitude.value();
  const double w = omega.value();
  const double a = half_gamma.value();
  if (!(a > 0.0)) throw DomainError("damped cosine energy needs a positive damping rate");
  // f'' = A e^{-at} (P cos wt + Q sin wt)
  const double p = a * a - w * w;
  const double q = 2.0 * a * w;
  const double b = 2.0 * a;
  const double r = b * b + 4.0 * w * w;
  const double cc = 0.5 * (1.0 / b + b / r);
  const double ss = 0.5 * (1.0 / b - b / r);
  const double cs = w / r;
  return Energy::mev(kLarmor * amp * amp * (p * p * cc + q * q * ss + 2.0 * p * q * cs));
}

OracleReport make_report(std::string name, double reference, double test, double tolerance,
                         std::string note) {
  OracleReport r;
  r.check_name = std::move(name);
  r.reference_value = reference;
  r.test_value = test;
  const double diff = std::abs(test - reference);
  r.rel_error = std::abs(reference) >= 1e-12 ? diff / std::abs(reference) : diff;
  r.tolerance = tolerance;
  r.passed = r.rel_error <= tolerance;
  r.note = std::move(note);
  return r;
}

namespace {

OracleReport skipped(std::string name, std::string note) {
  OracleReport r;
  r.check_name = std::move(name);
  r.reference_value = std::numeric_limits<double>::quiet_NaN();
  r.test_value = std::numeric_limits<double>::quiet_NaN();
  r.rel_error = 0.0;
  r.tolerance = std::numeric_limits<double>::infinity();
  r.passed = true;
  r.warning = true;
  r.note = std::move(note);
  return r;
}

OracleReport failed(std::string name, const std::exception& e) {
  OracleReport r;
  r.check_name = std::move(name);
  r.reference_value = std::numeric_limits<double>::quiet_NaN();
  r.test_value = std::numeric_limits<double>::quiet_NaN();
  r.rel_error = std::numeric_limits<double>::infinity();
  r.tolerance = 0.0;
  r.passed = false;
  r.note = e.what();
  return r;
}

double complex_rel_error(std::complex<double> reference, std::complex<double> test) {
  const double diff = std::abs(test - reference);
  return std::abs(reference) >= 1e-12 ? diff / std::abs(reference) : diff;
}

OracleReport transform_row(std::string name, const FragmentParams& params, double hw) {
  const auto numeric = numeric_fourier_accel(params, Energy::mev(hw));
  const auto exact = fourier_accel_exact(params, Energy::mev(hw));
  OracleReport r = make_report(std::move(name), std::abs(numeric.value), std::abs(exact), 1e-6);
  r.rel_error = complex_rel_error(numeric.value, exact);
  r.passed = r.rel_error <= r.tolerance;
  if (numeric.short_window) r.note = "oracle window too short for full precision";
  return r;
}

}  // namespace

std::vector<OracleReport> run_validation_suite(const FragmentParams& params) {
  params.validate_for_spectrum();
  std::vector<OracleReport> rows;
  auto guarded = [&rows](const std::string& name, auto&& check) {
    try {
      rows.push_back(check(name));
    } catch (const std::exception& e) {
      rows.push_back(failed(name, e));
    }
  };

  const double d0 = params.d0().value();
  const bool null_dipole = d0 == 0.0;
  const double gamma = params.total_gamma().value();
  const double sigma = params.sigma().value();
  const double delta = params.delta().value();
  const bool broad = params.broad_resonance();
  // Energies are exactly zero without a dipole; compare absolutely.
  auto energy_tolerance = [&](double tol) { return null_dipole ? 1e-15 : tol; };

  {
    const double limit = kNarrowResonanceLimit;
    const double ratio = gamma / sigma;
    OracleReport r;
    r.check_name = "narrow_resonance";
    r.reference_value = limit;
    r.test_value = ratio;
    r.rel_error = std::max(0.0, (ratio - limit) / limit);
    r.tolerance = std::numeric_limits<double>::infinity();
    r.passed = true;
    r.warning = broad;
    r.note = broad ? "gamma / Sigma above the narrow-resonance limit; single-line checks skipped"
                   : "";
    rows.push_back(r);
  }

  guarded("decomposition_equivalence", [&](const std::string& name) {
    const auto dec = decompose(params);
    double worst = 0.0;
    constexpr int kPoints = 10000;
    for (int i = 0; i <= kPoints; ++i) {
      const Time t = Time::inverse_mev(static_cast<double>(i) / (kPoints * gamma));
      const double diff = std::abs(dec.dipole(t) - dipole_t(params, t).value());
      worst = std::max(worst, null_dipole ? diff : diff / std::abs(d0));
    }
    return make_report(name, 0.0, worst, 1e-13, "max |product - sum| / |D0| over t in [0, 1/gamma]");
  });

  guarded("envelope_bound", [&](const std::string& name) {
    double worst = 0.0;
    constexpr int kPoints = 10000;
    for (int i = 0; i <= kPoints; ++i) {
      const double t = 10.0 * static_cast<double>(i) / (kPoints * gamma);
      const double d = std::abs(dipole_t(params, Time::inverse_mev(t)).value());
      const double envelope = std::abs(d0) * std::exp(-0.5 * gamma * t);
      worst = std::max(worst, d - envelope);
    }
    return make_report(name, 0.0, null_dipole ? worst : worst / std::abs(d0), 1e-13,
                       "max excess of |D(t)| over |D0| exp(-gamma t / 2)");
  });

  guarded("accel_finite_difference", [&](const std::string& name) {
    const double h = 1e-3 / sigma;
    std::mt19937_64 rng(20190601);
    std::uniform_real_distribution<double> pick(6.0 * h, 10.0 / gamma);
    auto d = [&](double t) { return dipole_t(params, Time::inverse_mev(t)).value(); };
    double worst = 0.0;
    double scale = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = pick(rng);
      const double fd =
          (-d(t + 2 * h) + 16 * d(t + h) - 30 * d(t) + 16 * d(t - h) - d(t - 2 * h)) / (12 * h * h);
      const double exact = dipole_accel_t(params, Time::inverse_mev(t));
      worst = std::max(worst, std::abs(exact - fd));
      scale = std::max(scale, std::abs(exact));
    }
    return make_report(name, 0.0, scale > 0.0 ? worst / scale : worst, 1e-6,
                       "5-point central difference, 100 random times");
  });

  Energy time_energy;
  guarded("time_energy_oracle", [&](const std::string& name) {
    time_energy = total_energy_time_domain(params);
    const Energy reference = numeric_time_energy(params);
    return make_report(name, reference.value(), time_energy.value(), energy_tolerance(1e-6),
                       "adaptive vs fixed-panel Larmor integral (MeV)");
  });

  Energy e_exact;
  guarded("parseval", [&](const std::string& name) {
    e_exact = radiated_energy(params, AmplitudeMode::ExactClosedForm, 0.0,
                              std::numeric_limits<double>::infinity());
    return make_report(name, time_energy.value(), e_exact.value(), energy_tolerance(1e-4),
                       "frequency-integrated vs time-domain energy (MeV)");
  });

  guarded("dc_null", [&](const std::string& name) {
    const double at_zero = std::abs(fourier_accel_exact(params, Energy::mev(0.0)));
    const double peak = std::abs(fourier_accel_exact(params, params.sigma()));
    return make_report(name, 0.0, peak > 0.0 ? at_zero / peak : at_zero, 1e-12,
                       "|F(0)| / |F(Sigma)|");
  });

  guarded("oracle_transform_sum", [&](const std::string& name) {
    return transform_row(name, params, sigma);
  });
  if (delta > 0.0) {
    guarded("oracle_transform_difference", [&](const std::string& name) {
      return transform_row(name, params, delta);
    });
  }
  guarded("oracle_transform_between", [&](const std::string& name) {
    return transform_row(name, params, 0.5 * (sigma + delta));
  });

  guarded("difference_term_energy", [&](const std::string& name) {
    const Energy reference =
        damped_cosine_energy(DipoleMoment::e_fm(0.5 * d0), params.delta(), params.total_gamma() / 2.0);
    const Energy test = term_energy(params, DipoleTerm::Difference);
    return make_report(name, reference.value(), test.value(), energy_tolerance(1e-6),
                       "Delta line alone, closed-form time integral vs spectrum (MeV)");
  });

  if (broad && !null_dipole) {
    // (Delta / Sigma)^4 only holds when the two lines are well separated.
    rows.push_back(skipped("difference_term_fraction", "line ratio skipped for a broad resonance"));
  } else guarded("difference_term_fraction", [&](const std::string& name) {
    const double diff = term_energy(params, DipoleTerm::Difference).value();
    const double sum = term_energy(params, DipoleTerm::Sum).value();
    const double leading = std::pow(delta / sigma, 4);
    if (null_dipole) return make_report(name, 0.0, diff + sum, 1e-15, "no dipole");
    return make_report(name, leading, diff / sum, 0.05,
                       "Delta-line energy over Sigma-line energy vs (Delta / Sigma)^4");
  });

  if (null_dipole) {
    guarded("null_yield", [&](const std::string& name) {
      const double n = photon_count(params, AmplitudeMode::ExactClosedForm, 0.0,
                                    std::numeric_limits<double>::infinity());
      return make_report(name, 0.0, n, 1e-15, "no dipole, no photons");
    });
    return rows;
  }

  const char* skip_note = "single-line check skipped for a broad resonance";
  if (broad) {
    for (const char* name : {"peak_location", "fwhm", "paper_exact_energy_ratio", "tau_linearity",
                             "single_line_yield"}) {
      rows.push_back(skipped(name, skip_note));
    }
    return rows;
  }

  guarded("peak_location", [&](const std::string& name) {
    const auto peak = locate_peak(build_spectrum(params));
    return make_report(name, sigma, peak.hw_mev, peak.grid_step_mev / sigma,
                       "argmax of dE/dhw within one grid step of Sigma (MeV)");
  });

  guarded("fwhm", [&](const std::string& name) {
    const auto peak = locate_peak(build_spectrum(params));
    return make_report(name, gamma, peak.fwhm_mev, 0.05, "width of the Sigma line vs hbar / tau");
  });

  guarded("paper_exact_energy_ratio", [&](const std::string& name) {
    const double paper = radiated_energy(params, AmplitudeMode::PaperPole, 0.0,
                                         std::numeric_limits<double>::infinity())
                             .value();
    return make_report(name, 16.0, paper / e_exact.value(), 0.01,
                       "single-pole amplitude is 4x the exact one at the peak");
  });

  guarded("tau_linearity", [&](const std::string& name) {
    FragmentParams longer = params;
    longer.gamma2 = params.gamma2 / 2.0;
    longer.gamma3 = params.gamma3 / 2.0;
    const double inf = std::numeric_limits<double>::infinity();
    const double n1 = photon_count(params, AmplitudeMode::ExactClosedForm, 0.0, inf);
    const double n2 = photon_count(longer, AmplitudeMode::ExactClosedForm, 0.0, inf);
    return make_report(name, 2.0, n2 / n1, 0.005, "N(2 tau) / N(tau)");
  });

  guarded("single_line_yield", [&](const std::string& name) {
    const double n = photon_count(params, AmplitudeMode::ExactClosedForm, 0.0,
                                  std::numeric_limits<double>::infinity());
    return make_report(name, e_exact.value() / sigma, n, 0.05, "N vs E_total / Sigma");
  });

  return rows;
}

}  // namespace fragrad::oracle
