#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fragrad/errors.hpp"
#include "fragrad/shape.hpp"

namespace fragrad {
namespace {

TEST(LegendreHarmonic, Monopole) {
  EXPECT_NEAR(legendre_harmonic(0, 0.3), 0.2820948, 1e-7);
  EXPECT_NEAR(legendre_harmonic(0, -1.0), 1.0 / std::sqrt(4.0 * std::numbers::pi), 1e-15);
}

TEST(LegendreHarmonic, QuadrupoleAtPole) { EXPECT_NEAR(legendre_harmonic(2, 1.0), 0.6307831, 1e-7); }

TEST(LegendreHarmonic, OctupoleVanishesAtEquator) { EXPECT_EQ(legendre_harmonic(3, 0.0), 0.0); }

TEST(LegendreHarmonic, Parity) {
  for (double x : {0.1, 0.4, 0.9}) {
    EXPECT_DOUBLE_EQ(legendre_harmonic(1, -x), -legendre_harmonic(1, x));
    EXPECT_DOUBLE_EQ(legendre_harmonic(2, -x), legendre_harmonic(2, x));
    EXPECT_DOUBLE_EQ(legendre_harmonic(3, -x), -legendre_harmonic(3, x));
  }
}

TEST(LegendreHarmonic, OrthonormalOnTheSphere) {
  // 2 pi int_{-1}^{1} Y_l Y_m dx = delta_lm, by 200-point midpoint-free Simpson.
  constexpr int n = 2000;
  for (int l = 0; l <= 3; ++l) {
    for (int m = 0; m <= 3; ++m) {
      double sum = 0.0;
      for (int i = 0; i <= n; ++i) {
        const double x = -1.0 + 2.0 * i / n;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * legendre_harmonic(l, x) * legendre_harmonic(m, x);
      }
      sum *= 2.0 / n / 3.0 * 2.0 * std::numbers::pi;
      EXPECT_NEAR(sum, l == m ? 1.0 : 0.0, 1e-10) << l << "," << m;
    }
  }
}

TEST(LegendreHarmonic, RejectsBadArguments) {
  EXPECT_THROW(legendre_harmonic(4, 0.0), DomainError);
  EXPECT_THROW(legendre_harmonic(-1, 0.0), DomainError);
  EXPECT_THROW(legendre_harmonic(2, 1.5), DomainError);
}

TEST(ShapeRadius, UndeformedSphere) {
  const Deformation sphere(0.0, 0.0, 0.0, 0.0, Length::fm(6.0));
  for (double x : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
    EXPECT_DOUBLE_EQ(shape_radius(sphere, x).value(), 6.0);
  }
}

TEST(ShapeRadius, QuadrupoleOnlyAtPole) {
  const Deformation d(0.0, 0.0, 0.7, 0.0, Length::fm(6.0));
  EXPECT_NEAR(shape_radius(d, 1.0).value(), 8.649, 1e-3);
}

TEST(ShapeRadius, PearShapeAtEquator) {
  const auto d = Deformation::constrained(0.0, 0.7, 0.7, Length::fm(6.0));
  EXPECT_NEAR(shape_radius(d, 0.0).value(), 4.675, 1e-3);
}

TEST(ShapeRadius, DegenerateShapeThrows) {
  const Deformation d(0.0, 0.0, -1.9, 0.0, Length::fm(6.0));
  EXPECT_THROW(shape_radius(d, 1.0), DomainError);
}

TEST(Deformation, RejectsLargeAmplitudesAndBadRadius) {
  EXPECT_THROW(Deformation(0.0, 0.0, 2.0, 0.0, Length::fm(6.0)), DomainError);
  EXPECT_THROW(Deformation(0.0, 0.0, 0.0, -2.5, Length::fm(6.0)), DomainError);
  EXPECT_THROW(Deformation(0.0, 0.0, 0.1, 0.1, Length::fm(0.0)), DomainError);
}

TEST(Deformation, ConstrainedUsesCentreOfMassCondition) {
  const auto d = Deformation::constrained(0.0, 0.4, -0.3, Length::fm(5.0));
  EXPECT_EQ(d.beta1, -0.743 * 0.4 * -0.3);
}

TEST(ConstrainedBeta1, Examples) {
  EXPECT_NEAR(constrained_beta1(0.7, 0.7), -0.36407, 1e-12);
  EXPECT_EQ(constrained_beta1(0.0, 0.6), 0.0);
  EXPECT_NEAR(constrained_beta1(0.5, -0.5), 0.18575, 1e-12);
}

TEST(ConstrainedBeta1, Bilinear) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng), s = 3.0 * u(rng);
    EXPECT_NEAR(constrained_beta1(s * a, b), s * constrained_beta1(a, b), 1e-15);
    EXPECT_NEAR(constrained_beta1(a, s * b), s * constrained_beta1(a, b), 1e-15);
  }
}

TEST(DipoleMoment, ReferenceFragment) {
  const Polarizability k(Length::fm(10.2041));
  EXPECT_NEAR(dipole_moment(k, 0.7, 0.7).value(), -5.0, 1e-4);
  EXPECT_NEAR(dipole_moment(k, 0.35, 0.7).value(), -2.5, 1e-4);
  EXPECT_EQ(dipole_moment(k, 0.0, 0.7).value(), 0.0);
}

TEST(KappaFromD0, Examples) {
  EXPECT_NEAR(kappa_from_d0(Length::fm(5.0), 0.7, 0.7).kappa().value(), 10.2041, 1e-4);
  EXPECT_NEAR(kappa_from_d0(Length::fm(2.5), 0.7, 0.7).kappa().value(), 5.1020, 1e-4);
  EXPECT_THROW(kappa_from_d0(Length::fm(0.0), 0.7, 0.7), DomainError);
  EXPECT_THROW(kappa_from_d0(Length::fm(5.0), 0.0, 0.7), DomainError);
}

TEST(KappaFromD0, RoundTripsThroughDipoleMoment) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> amp(0.01, 1.5);
  std::uniform_real_distribution<double> scale(0.1, 20.0);
  for (int i = 0; i < 500; ++i) {
    // kappa > 0 restricts the round trip to amplitudes of equal sign.
    const double sign = i % 2 ? 1.0 : -1.0;
    const double a = sign * amp(rng), b = sign * amp(rng), d0 = scale(rng);
    const auto k = kappa_from_d0(Length::fm(d0), a, b);
    EXPECT_LT(std::abs(dipole_moment(k, a, b).value() + d0) / d0, 1e-14);
  }
}

TEST(Polarizability, MustBePositive) {
  EXPECT_THROW(Polarizability(Length::fm(0.0)), DomainError);
  EXPECT_THROW(Polarizability(Length::fm(-1.0)), DomainError);
}

}  // namespace
}  // namespace fragrad
