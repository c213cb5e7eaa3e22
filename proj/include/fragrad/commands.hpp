#pragma once

// Command implementations behind the fragrad executable. Each writes to the
// given streams and throws ConfigError / DomainError / NumericError on failure;
// run_guarded turns those into exit codes.

#include <functional>
#include <iosfwd>

#include "json.hpp"

#include "fragrad/config.hpp"

namespace fragrad::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitNumericError = 3,
};

/// Validation exit codes saturate here.
inline constexpr int kMaxFailureExitCode = 125;

/// CSV: hw_mev, dE_dhw_per_mev, dN_dhw_per_mev with the resolved config echoed
/// as '#' comment lines.
void write_spectrum(const RunConfig& config, std::ostream& out);

/// n_gamma_per_fission, e_total_mev, e_total_time_domain_mev,
/// parseval_rel_error, peak_hw_mev, fwhm_mev.
nlohmann::ordered_json yield_report(const RunConfig& config);

/// CSV: param_value, n_gamma_per_fission, e_total_mev, one row per sweep value.
void write_sweep(const RunConfig& config, const SweepSpec& sweep, std::ostream& out);

/// Runs the oracle suite. Writes a text table to `text` and, if given, the CSV
/// report to `csv`. Returns the number of failed checks, capped at 125.
int write_validation(const RunConfig& config, std::ostream& text, std::ostream* csv);

/// Runs body and maps exceptions to exit codes; messages go to err.
int run_guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace fragrad::cli
