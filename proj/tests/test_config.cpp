#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "fragrad/config.hpp"
#include "fragrad/errors.hpp"

namespace fragrad {
namespace {

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

TEST(RunConfig, DefaultsDescribeReferenceFragment) {
  const RunConfig cfg = parse_config("");
  EXPECT_EQ(cfg.fragment, "140Xe");
  EXPECT_EQ(cfg.mode, AmplitudeMode::ExactClosedForm);
  const auto p = cfg.to_params();
  const auto ref = reference_fragment();
  EXPECT_EQ(p.hw2.value(), ref.hw2.value());
  EXPECT_EQ(p.gamma2.value(), ref.gamma2.value());
  EXPECT_EQ(p.kappa.kappa().value(), ref.kappa.kappa().value());
}

TEST(RunConfig, ParsesCommentsAndWhitespace) {
  const RunConfig cfg = parse_config(
      "# fragment settings\n"
      "fragment = 144Ba   # heavy fragment\n"
      "  hw2_mev=1.5\r\n"
      "\n"
      "gamma2_mev = 0.002\n"
      "gamma3_mev = 0.003\n"
      "kappa_fm = 8\n"
      "mode = paper\n"
      "refine = no\n"
      "points = 30001\n");
  EXPECT_EQ(cfg.fragment, "144Ba");
  EXPECT_EQ(cfg.hw2_mev, 1.5);
  EXPECT_FALSE(cfg.tau_diss_s.has_value());
  EXPECT_FALSE(cfg.d0_fm.has_value());
  EXPECT_EQ(cfg.mode, AmplitudeMode::PaperPole);
  EXPECT_FALSE(cfg.grid.refine);
  EXPECT_EQ(cfg.grid.points, 30001u);
  const auto p = cfg.to_params();
  EXPECT_DOUBLE_EQ(p.total_gamma().value(), 0.005);
  EXPECT_DOUBLE_EQ(p.kappa.kappa().value(), 8.0);
}

TEST(RunConfig, EchoRoundTrips) {
  RunConfig cfg = parse_config("hw3_mev = 3.1\ngamma2_mev = 1e-3\ngamma3_mev = 2.5e-3\nhw_max_mev = 30\n");
  const RunConfig again = parse_config(join(cfg.echo()));
  EXPECT_EQ(join(again.echo()), join(cfg.echo()));
  EXPECT_EQ(again.gamma3_mev, cfg.gamma3_mev);
  EXPECT_EQ(again.grid.hw_max_mev, cfg.grid.hw_max_mev);
}

void expect_config_error(const std::string& text, const std::string& key) {
  try {
    (void)parse_config(text).to_params();
    FAIL() << "expected ConfigError for key " << key;
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), key) << e.what();
  }
}

TEST(RunConfig, ErrorsNameTheOffendingKey) {
  expect_config_error("colour = blue\n", "colour");
  expect_config_error("hw2_mev = fast\n", "hw2_mev");
  expect_config_error("hw2_mev = -2\n", "hw2_mev");
  expect_config_error("tau_diss_s = 0\n", "tau_diss_s");
  expect_config_error("tau_diss_s = 1e-19\ngamma2_mev = 1e-3\ngamma3_mev = 1e-3\n", "tau_diss_s");
  expect_config_error("gamma2_mev = 1e-3\n", "gamma3_mev");
  expect_config_error("gamma2_mev = 0\ngamma3_mev = 0\n", "gamma2_mev");
  expect_config_error("d0_fm = 5\nkappa_fm = 10\n", "d0_fm");
  expect_config_error("kappa_fm = -1\n", "kappa_fm");
  expect_config_error("beta2_0 = 2.5\n", "beta2_0");
  expect_config_error("mode = fancy\n", "mode");
  expect_config_error("refine = maybe\n", "refine");
  expect_config_error("hw2_mev = 1\nhw2_mev = 2\n", "hw2_mev");
  expect_config_error("hw_max_mev = 6\n", "hw_max_mev");
  expect_config_error("points = 1\n", "points");
  expect_config_error("beta2_0 = 0.5\nbeta3_0 = -0.5\n", "d0_fm");
}

TEST(RunConfig, MalformedLine) { EXPECT_THROW(parse_config("just words\n"), ConfigError); }

TEST(RunConfig, ZeroAmplitudeWithDipoleScaleGivesNullDipole) {
  const auto p = parse_config("beta2_0 = 0\n").to_params();
  EXPECT_EQ(p.d0().value(), 0.0);
}

TEST(RunConfig, SetReplacesAlternatives) {
  RunConfig cfg;
  cfg.set("gamma2_mev", "0.001");
  cfg.set("gamma3_mev", "0.001");
  EXPECT_FALSE(cfg.tau_diss_s.has_value());
  cfg.set("tau_diss_s", "2e-19");
  EXPECT_FALSE(cfg.gamma2_mev.has_value());
  cfg.set("kappa_fm", "3");
  EXPECT_FALSE(cfg.d0_fm.has_value());
  EXPECT_NO_THROW((void)cfg.to_params());
}

TEST(SweepSpec, LogValuesAreGeometric) {
  SweepSpec s{"tau_diss_s", 1e-20, 1e-18, 5, true};
  const auto v = s.values();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.front(), 1e-20);
  EXPECT_EQ(v.back(), 1e-18);
  EXPECT_NEAR(v[2], 1e-19, 1e-32);
}

TEST(SweepSpec, LinearValues) {
  SweepSpec s{"d0_fm", 2.5, 5.0, 2, false};
  EXPECT_EQ(s.values(), (std::vector<double>{2.5, 5.0}));
}

TEST(SweepSpec, Validation) {
  EXPECT_THROW((SweepSpec{"mode", 0, 1, 3, false}.validate()), ConfigError);
  EXPECT_THROW((SweepSpec{"d0_fm", 5, 2, 3, false}.validate()), ConfigError);
  EXPECT_THROW((SweepSpec{"d0_fm", 2, 5, 1, false}.validate()), ConfigError);
  EXPECT_THROW((SweepSpec{"hw2_mev", 0, 5, 3, true}.validate()), ConfigError);
}

TEST(FormatNumber, NineSignificantDigits) {
  EXPECT_EQ(format_number(0.0074247710411), "7.42477104e-03");
  EXPECT_EQ(format_number(5.0), "5.00000000e+00");
  EXPECT_EQ(format_number(std::nan("")), "nan");
}

}  // namespace
}  // namespace fragrad
