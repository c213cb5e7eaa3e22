#include "fragrad/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "fragrad/errors.hpp"

namespace fragrad {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError(std::string(key), "expected a finite number, got '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  std::size_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" + std::string(text) + "'");
}

// Shortest text that parses back to the same double.
std::string exact_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double positive(const char* key, double v) {
  if (!(v > 0.0)) throw ConfigError(key, "must be positive");
  return v;
}

double amplitude(const char* key, double v) {
  if (!(std::abs(v) < 2.0)) throw ConfigError(key, "deformation amplitude must satisfy |beta| < 2");
  return v;
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) {
  const std::string k(key);
  if (key == "fragment") {
    fragment = std::string(value);
  } else if (key == "hw2_mev") {
    hw2_mev = parse_double(key, value);
  } else if (key == "hw3_mev") {
    hw3_mev = parse_double(key, value);
  } else if (key == "beta2_0") {
    beta2_0 = parse_double(key, value);
  } else if (key == "beta3_0") {
    beta3_0 = parse_double(key, value);
  } else if (key == "tau_diss_s") {
    tau_diss_s = parse_double(key, value);
    gamma2_mev.reset();
    gamma3_mev.reset();
  } else if (key == "gamma2_mev") {
    gamma2_mev = parse_double(key, value);
    tau_diss_s.reset();
  } else if (key == "gamma3_mev") {
    gamma3_mev = parse_double(key, value);
    tau_diss_s.reset();
  } else if (key == "d0_fm") {
    d0_fm = parse_double(key, value);
    kappa_fm.reset();
  } else if (key == "kappa_fm") {
    kappa_fm = parse_double(key, value);
    d0_fm.reset();
  } else if (key == "beta0") {
    beta0 = parse_double(key, value);
  } else if (key == "hw_max_mev") {
    grid.hw_max_mev = parse_double(key, value);
  } else if (key == "points") {
    grid.points = parse_count(key, value);
  } else if (key == "refine") {
    grid.refine = parse_bool(key, value);
  } else if (key == "ir_cutoff_mev") {
    grid.ir_cutoff_mev = parse_double(key, value);
  } else if (key == "mode") {
    const auto m = parse_amplitude_mode(value);
    if (!m) throw ConfigError(k, "expected exact or paper, got '" + std::string(value) + "'");
    mode = *m;
  } else {
    throw ConfigError(k, "unknown configuration key");
  }
}

FragmentParams RunConfig::to_params() const {
  FragmentParams p;
  p.hw2 = Energy::mev(positive("hw2_mev", hw2_mev));
  p.hw3 = Energy::mev(positive("hw3_mev", hw3_mev));
  p.beta2_0 = amplitude("beta2_0", beta2_0);
  p.beta3_0 = amplitude("beta3_0", beta3_0);

  if (tau_diss_s) {
    if (gamma2_mev || gamma3_mev) {
      throw ConfigError("tau_diss_s", "give either tau_diss_s or gamma2_mev/gamma3_mev, not both");
    }
    const Energy g = damping_from_lifetime(Time::seconds(positive("tau_diss_s", *tau_diss_s)));
    p.gamma2 = g / 2.0;
    p.gamma3 = g / 2.0;
  } else {
    if (!gamma2_mev || !gamma3_mev) {
      throw ConfigError(gamma2_mev ? "gamma3_mev" : "gamma2_mev",
                        "both widths are needed when tau_diss_s is absent");
    }
    if (!(*gamma2_mev >= 0.0)) throw ConfigError("gamma2_mev", "must be non-negative");
    if (!(*gamma3_mev >= 0.0)) throw ConfigError("gamma3_mev", "must be non-negative");
    if (!(*gamma2_mev + *gamma3_mev > 0.0)) {
      throw ConfigError("gamma2_mev", "total width must be positive; the radiated energy diverges");
    }
    p.gamma2 = Energy::mev(*gamma2_mev);
    p.gamma3 = Energy::mev(*gamma3_mev);
  }

  if (d0_fm) {
    if (kappa_fm) throw ConfigError("d0_fm", "give either d0_fm or kappa_fm, not both");
    const double d0 = positive("d0_fm", *d0_fm);
    const double product = p.beta2_0 * p.beta3_0;
    if (product == 0.0) {
      // D0 vanishes for any kappa; keep a valid placeholder.
      p.kappa = Polarizability(Length::fm(d0));
    } else if (product < 0.0) {
      throw ConfigError("d0_fm", "needs beta2_0 and beta3_0 of the same sign; use kappa_fm");
    } else {
      p.kappa = kappa_from_d0(Length::fm(d0), p.beta2_0, p.beta3_0);
    }
  } else if (kappa_fm) {
    p.kappa = Polarizability(Length::fm(positive("kappa_fm", *kappa_fm)));
  } else {
    throw ConfigError("d0_fm", "one of d0_fm or kappa_fm is required");
  }

  if (!std::isfinite(beta0)) throw ConfigError("beta0", "must be finite");
  if (grid.points < 2) throw ConfigError("points", "need at least two grid points");
  if (grid.hw_max_mev && !(*grid.hw_max_mev >= 1.5 * (hw2_mev + hw3_mev))) {
    throw ConfigError("hw_max_mev", "must be at least 1.5 * (hw2_mev + hw3_mev)");
  }
  if (!(grid.ir_cutoff_mev > 0.0)) throw ConfigError("ir_cutoff_mev", "must be positive");
  return p;
}

std::vector<std::string> RunConfig::echo() const {
  std::vector<std::string> lines;
  auto add = [&lines](const char* key, const std::string& value) {
    lines.push_back(std::string(key) + " = " + value);
  };
  add("fragment", fragment);
  add("hw2_mev", exact_number(hw2_mev));
  add("hw3_mev", exact_number(hw3_mev));
  add("beta2_0", exact_number(beta2_0));
  add("beta3_0", exact_number(beta3_0));
  if (tau_diss_s) add("tau_diss_s", exact_number(*tau_diss_s));
  if (gamma2_mev) add("gamma2_mev", exact_number(*gamma2_mev));
  if (gamma3_mev) add("gamma3_mev", exact_number(*gamma3_mev));
  if (d0_fm) add("d0_fm", exact_number(*d0_fm));
  if (kappa_fm) add("kappa_fm", exact_number(*kappa_fm));
  add("beta0", exact_number(beta0));
  if (grid.hw_max_mev) add("hw_max_mev", exact_number(*grid.hw_max_mev));
  add("points", std::to_string(grid.points));
  add("refine", grid.refine ? "true" : "false");
  add("ir_cutoff_mev", exact_number(grid.ir_cutoff_mev));
  add("mode", std::string(to_string(mode)));
  return lines;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  bool explicit_tau = false;
  bool explicit_gamma = false;
  bool explicit_d0 = false;
  bool explicit_kappa = false;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": missing key");
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError(std::string(key), "given more than once");
    }
    explicit_tau |= key == "tau_diss_s";
    explicit_gamma |= key == "gamma2_mev" || key == "gamma3_mev";
    explicit_d0 |= key == "d0_fm";
    explicit_kappa |= key == "kappa_fm";
    cfg.set(key, value);
  }
  if (explicit_tau && explicit_gamma) {
    throw ConfigError("tau_diss_s", "give either tau_diss_s or gamma2_mev/gamma3_mev, not both");
  }
  if (explicit_gamma && (!cfg.gamma2_mev || !cfg.gamma3_mev)) {
    throw ConfigError(cfg.gamma2_mev ? "gamma3_mev" : "gamma2_mev",
                      "both widths are needed when tau_diss_s is absent");
  }
  if (explicit_d0 && explicit_kappa) {
    throw ConfigError("d0_fm", "give either d0_fm or kappa_fm, not both");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names = {"tau_diss_s", "d0_fm",   "beta2_0",
                                                 "beta3_0",    "hw2_mev", "hw3_mev"};
  return names;
}

void SweepSpec::validate() const {
  const auto& names = sweepable_parameters();
  if (std::find(names.begin(), names.end(), param) == names.end()) {
    throw ConfigError("param", "cannot sweep '" + param + "'");
  }
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
    throw ConfigError("from", "sweep needs finite from < to");
  }
  if (points < 2) throw ConfigError("points", "sweep needs at least two points");
  if (log_scale && !(from > 0.0)) throw ConfigError("from", "log sweep needs from > 0");
}

std::vector<double> SweepSpec::values() const {
  validate();
  std::vector<double> out(points);
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / last;
    out[i] = log_scale ? std::exp(std::log(from) + f * (std::log(to) - std::log(from)))
                       : from + f * (to - from);
  }
  out.front() = from;
  out.back() = to;
  return out;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", value);
  return buf;
}

}  // namespace fragrad
