#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fragrad/errors.hpp"
#include "fragrad/units.hpp"

namespace fragrad {
namespace {

TEST(PhysConstants, ElectronChargeSquaredMatchesAlpha) {
  EXPECT_DOUBLE_EQ(PhysConstants::e_squared / PhysConstants::hbar_c, PhysConstants::alpha_em);
}

TEST(DampingFromLifetime, ReferenceLifetime) {
  EXPECT_NEAR(damping_from_lifetime(Time::seconds(1e-19)).value(), 6.5821e-3, 1e-7);
}

TEST(DampingFromLifetime, LifetimeEqualToHbarGivesOneMeV) {
  EXPECT_NEAR(damping_from_lifetime(Time::seconds(6.582119569e-22)).value(), 1.0, 1e-15);
}

TEST(DampingFromLifetime, DoublingLifetimeHalvesWidth) {
  EXPECT_NEAR(damping_from_lifetime(Time::seconds(2e-19)).value(), 3.2911e-3, 1e-7);
}

TEST(DampingFromLifetime, RejectsNonPositiveOrNonFinite) {
  EXPECT_THROW(damping_from_lifetime(Time::seconds(0.0)), DomainError);
  EXPECT_THROW(damping_from_lifetime(Time::seconds(-1e-19)), DomainError);
  EXPECT_THROW(damping_from_lifetime(Time::seconds(std::numeric_limits<double>::infinity())),
               DomainError);
  EXPECT_THROW(damping_from_lifetime(Time::seconds(std::nan(""))), DomainError);
}

TEST(DampingFromLifetime, RoundTripsToOnePartInTenToTheTwelve) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_gamma(-8.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const Energy g = Energy::mev(std::pow(10.0, log_gamma(rng)));
    const Energy back = damping_from_lifetime(lifetime_from_damping(g));
    EXPECT_LT(std::abs(back.value() - g.value()) / g.value(), 1e-12);
  }
}

TEST(Time, SecondsConversionIsConsistent) {
  const Time t = Time::seconds(1e-19);
  EXPECT_NEAR(t.seconds(), 1e-19, 1e-31);
  EXPECT_NEAR(t.inverse_mev(), 1e-19 / PhysConstants::hbar, 1e-9);
}

TEST(Quantity, SameUnitArithmetic) {
  const Energy a = Energy::mev(2.2);
  const Energy b = Energy::mev(2.8);
  EXPECT_DOUBLE_EQ((a + b).value(), 5.0);
  EXPECT_DOUBLE_EQ((b - a).value(), b.value() - a.value());
  EXPECT_DOUBLE_EQ((a * 2.0).value(), 4.4);
  EXPECT_DOUBLE_EQ(b / a, 2.8 / 2.2);
  EXPECT_LT(a, b);
}

}  // namespace
}  // namespace fragrad
