#include "fragrad/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "fragrad/errors.hpp"
#include "fragrad/oracle.hpp"
#include "fragrad/spectrum.hpp"

namespace fragrad::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void write_header(const RunConfig& config, const char* command, std::ostream& out) {
  out << "## fragrad " << command << '\n';
  for (const auto& line : config.echo()) out << "# " << line << '\n';
}

nlohmann::ordered_json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void write_spectrum(const RunConfig& config, std::ostream& out) {
  const FragmentParams params = config.to_params();
  const Spectrum spectrum = build_spectrum(params, config.grid, config.mode);
  write_header(config, "spectrum", out);
  out << "## e_total_mev " << format_number(spectrum.e_total.value()) << '\n';
  out << "## n_gamma_per_fission " << format_number(spectrum.n_gamma) << '\n';
  out << "hw_mev,dE_dhw_per_mev,dN_dhw_per_mev\n";
  for (const auto& p : spectrum.points) {
    out << format_number(p.hw_mev) << ',' << format_number(p.de_dhw) << ','
        << format_number(p.dn_dhw) << '\n';
  }
}

nlohmann::ordered_json yield_report(const RunConfig& config) {
  const FragmentParams params = config.to_params();
  const Spectrum spectrum = build_spectrum(params, config.grid, config.mode);
  const double e_freq = spectrum.e_total.value();
  const double e_time = total_energy_time_domain(params).value();
  const double diff = std::abs(e_freq - e_time);
  const double parseval = e_time != 0.0 ? diff / e_time : diff;
  const PeakInfo peak = locate_peak(spectrum);

  nlohmann::ordered_json j;
  j["fragment"] = config.fragment;
  j["mode"] = std::string(to_string(config.mode));
  j["n_gamma_per_fission"] = spectrum.n_gamma;
  j["e_total_mev"] = e_freq;
  j["e_total_time_domain_mev"] = e_time;
  j["parseval_rel_error"] = parseval;
  j["peak_hw_mev"] = number_or_null(peak.height > 0.0 ? peak.hw_mev : std::nan(""));
  j["fwhm_mev"] = number_or_null(peak.fwhm_mev);
  return j;
}

void write_sweep(const RunConfig& config, const SweepSpec& sweep, std::ostream& out) {
  const auto values = sweep.values();
  // Resolve every row before writing so a failure leaves no partial table.
  std::vector<std::string> rows;
  rows.reserve(values.size());
  for (const double v : values) {
    RunConfig row = config;
    char exact[32];
    const auto res = std::to_chars(exact, exact + sizeof exact, v);
    row.set(sweep.param, std::string_view(exact, static_cast<std::size_t>(res.ptr - exact)));
    const FragmentParams params = row.to_params();
    const double lo = lower_limit_mev(row.grid, row.mode);
    const double n = photon_count(params, row.mode, lo, kInf);
    const double e = radiated_energy(params, row.mode, 0.0, kInf).value();
    rows.push_back(format_number(v) + ',' + format_number(n) + ',' + format_number(e));
  }
  write_header(config, "sweep", out);
  out << "## sweep " << sweep.param << " from " << format_number(sweep.from) << " to "
      << format_number(sweep.to) << " points " << sweep.points
      << (sweep.log_scale ? " log" : " linear") << '\n';
  out << "param_value,n_gamma_per_fission,e_total_mev\n";
  for (const auto& r : rows) out << r << '\n';
}

int write_validation(const RunConfig& config, std::ostream& text, std::ostream* csv) {
  const FragmentParams params = config.to_params();
  const auto rows = oracle::run_validation_suite(params);

  text << "fragrad validate: " << config.fragment << '\n';
  text << "constants: hbar_c = " << format_number(PhysConstants::hbar_c)
       << " MeV fm, hbar = " << format_number(PhysConstants::hbar)
       << " MeV s, alpha = " << format_number(PhysConstants::alpha_em) << '\n';
  int failures = 0;
  for (const auto& r : rows) {
    const char* status = !r.passed ? "FAIL" : (r.warning ? "WARN" : "PASS");
    char line[256];
    std::snprintf(line, sizeof line, "%-4s  %-28s ref %-16s test %-16s err %-16s tol %-16s", status,
                  r.check_name.c_str(), format_number(r.reference_value).c_str(),
                  format_number(r.test_value).c_str(), format_number(r.rel_error).c_str(),
                  format_number(r.tolerance).c_str());
    text << line;
    if (!r.note.empty()) text << "  " << r.note;
    text << '\n';
    if (!r.passed) ++failures;
  }
  text << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
       << '\n';

  if (csv) {
    write_header(config, "validate", *csv);
    *csv << "check_name,reference_value,test_value,rel_error,tolerance,passed,warning,note\n";
    for (const auto& r : rows) {
      std::string note = r.note;
      std::replace(note.begin(), note.end(), ',', ';');
      *csv << r.check_name << ',' << format_number(r.reference_value) << ','
           << format_number(r.test_value) << ',' << format_number(r.rel_error) << ','
           << format_number(r.tolerance) << ',' << (r.passed ? "true" : "false") << ','
           << (r.warning ? "true" : "false") << ',' << note << '\n';
    }
  }
  return std::min(failures, kMaxFailureExitCode);
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NumericError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericError;
  }
}

}  // namespace fragrad::cli
