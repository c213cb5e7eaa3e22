// fragrad: gamma-ray spectrum and yield from post-rupture fragment vibrations.
//
//   fragrad spectrum --config run.cfg [--out spectrum.csv] [--mode exact|paper]
//   fragrad yield    --config run.cfg [--mode exact|paper]
//   fragrad sweep    --config run.cfg --param tau_diss_s --from 1e-20 --to 1e-18 --points 5 --log
//   fragrad validate [--config run.cfg] [--out report.csv]

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fragrad/commands.hpp"
#include "fragrad/config.hpp"
#include "fragrad/errors.hpp"

namespace {

using fragrad::RunConfig;
namespace cli = fragrad::cli;

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string mode;
};

RunConfig resolve_config(const CommonOptions& opts) {
  RunConfig cfg = opts.config_path.empty() ? RunConfig{} : fragrad::load_config(opts.config_path);
  if (!opts.mode.empty()) cfg.set("mode", opts.mode);
  return cfg;
}

// Output is assembled in memory and written once, so a failed run never
// leaves a truncated file behind.
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw fragrad::ConfigError("out", "cannot open " + path + " for writing");
  out << content;
  if (!out.flush()) throw fragrad::ConfigError("out", "failed writing " + path);
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool config_required) {
  auto* config = cmd->add_option("--config", opts.config_path, "Run configuration (key = value)");
  if (config_required) config->required();
  cmd->add_option("--out", opts.out_path, "Output file (default: standard output)");
  cmd->add_option("--mode", opts.mode, "Amplitude mode")->check(CLI::IsMember({"exact", "paper"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-statistical gamma rays from damped fission-fragment vibrations"};
  app.require_subcommand(1);

  CommonOptions spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Write dE/dhw and dN/dhw as CSV");
  add_common(spectrum, spectrum_opts, true);

  CommonOptions yield_opts;
  auto* yield = app.add_subcommand("yield", "Print photon yield and energy checks as JSON");
  add_common(yield, yield_opts, true);

  CommonOptions sweep_opts;
  fragrad::SweepSpec sweep_spec;
  auto* sweep = app.add_subcommand("sweep", "Yield over a range of one parameter, as CSV");
  add_common(sweep, sweep_opts, true);
  sweep->add_option("--param", sweep_spec.param, "Parameter to vary")
      ->required()
      ->check(CLI::IsMember(fragrad::sweepable_parameters()));
  sweep->add_option("--from", sweep_spec.from, "First value")->required();
  sweep->add_option("--to", sweep_spec.to, "Last value")->required();
  sweep->add_option("--points", sweep_spec.points, "Number of values (>= 2)")->required();
  sweep->add_flag("--log", sweep_spec.log_scale, "Geometric spacing");

  CommonOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "Cross-check closed forms against brute force");
  add_common(validate, validate_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitConfigError;
  }

  return cli::run_guarded(
      [&]() -> int {
        if (spectrum->parsed()) {
          std::ostringstream out;
          cli::write_spectrum(resolve_config(spectrum_opts), out);
          emit(spectrum_opts.out_path, out.str());
          return cli::kExitOk;
        }
        if (yield->parsed()) {
          emit(yield_opts.out_path, cli::yield_report(resolve_config(yield_opts)).dump(2) + "\n");
          return cli::kExitOk;
        }
        if (sweep->parsed()) {
          sweep_spec.validate();
          std::ostringstream out;
          cli::write_sweep(resolve_config(sweep_opts), sweep_spec, out);
          emit(sweep_opts.out_path, out.str());
          return cli::kExitOk;
        }
        std::ostringstream csv;
        const bool want_csv = !validate_opts.out_path.empty();
        const int failures =
            cli::write_validation(resolve_config(validate_opts), std::cout, want_csv ? &csv : nullptr);
        if (want_csv) emit(validate_opts.out_path, csv.str());
        return failures;
      },
      std::cerr);
}
