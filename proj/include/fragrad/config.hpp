#pragma once

// Run configuration: line-oriented "key = value" text, '#' starts a comment.
//
// Defaults describe the 140Xe reference fragment. Exactly one of tau_diss_s or
// the pair (gamma2_mev, gamma3_mev) sets the damping; exactly one of d0_fm or
// kappa_fm sets the dipole scale.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fragrad/dynamics.hpp"
#include "fragrad/spectrum.hpp"

namespace fragrad {

struct RunConfig {
  std::string fragment = "140Xe";
  double hw2_mev = 2.2;
  double hw3_mev = 2.8;
  double beta2_0 = 0.7;
  double beta3_0 = 0.7;
  std::optional<double> tau_diss_s = 1e-19;
  std::optional<double> gamma2_mev;
  std::optional<double> gamma3_mev;
  std::optional<double> d0_fm = 5.0;
  std::optional<double> kappa_fm;
  double beta0 = 0.0;
  GridSpec grid;
  AmplitudeMode mode = AmplitudeMode::ExactClosedForm;

  /// Applies one key. Setting tau_diss_s clears the explicit widths and vice
  /// versa; likewise for d0_fm and kappa_fm. Throws ConfigError naming the key.
  void set(std::string_view key, std::string_view value);

  /// Physical parameters. Throws ConfigError naming the offending key.
  [[nodiscard]] FragmentParams to_params() const;

  /// Canonical "key = value" lines; parse_config on them gives back this config.
  [[nodiscard]] std::vector<std::string> echo() const;
};

/// Throws ConfigError for unknown keys, malformed lines and conflicting entries.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Parameter scan over one config key.
struct SweepSpec {
  std::string param = "tau_diss_s";
  double from = 1e-20;
  double to = 1e-18;
  std::size_t points = 5;
  bool log_scale = false;

  /// Throws ConfigError for an unknown parameter, from >= to, points < 2 or
  /// a log scale over non-positive values.
  void validate() const;
  [[nodiscard]] std::vector<double> values() const;
};

/// Keys a sweep may vary.
const std::vector<std::string>& sweepable_parameters();

/// Nine significant digits in scientific notation.
std::string format_number(double value);

}  // namespace fragrad
