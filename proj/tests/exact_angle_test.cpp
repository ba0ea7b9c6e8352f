#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "achieve/errors.hpp"
#include "achieve/exact_angle.hpp"

using namespace achieve;

TEST(ExactAngle, DefaultParameterIsRootTwoOverSixteen) {
  EXPECT_NEAR(kDefaultT, std::sqrt(2.0) / 16.0, 1e-17);
  EXPECT_LT(kDefaultT, 1.0 / 9.0);
}

TEST(ExactAngle, BaseIsReducedModTwo) {
  EXPECT_EQ(ExactAngle(Rational(5, 2), 3), ExactAngle(Rational(1, 2), 3));
  EXPECT_EQ(ExactAngle(Rational(-1, 2), 0), ExactAngle(Rational(3, 2), 0));
  EXPECT_NE(ExactAngle(Rational(1, 2), 3), ExactAngle(Rational(1, 2), 4));
}

TEST(ExactAngle, RadiansMatchTheDefinition) {
  const double t = kDefaultT;
  const ExactAngle a(Rational(1, 3), 7);
  EXPECT_NEAR(a.radians(t), (1.0 / 3.0 + 7 * t / 2.0) * std::numbers::pi, 1e-12);
}

TEST(ExactAngle, LongStepCountsStayAccurate) {
  // 10^6 half steps reduced against 2 pi without drifting.
  const double t = kDefaultT;
  const ExactAngle a(Rational(0), 1000000);
  const double expected = std::fmod(1000000 * t / 2.0, 2.0) * std::numbers::pi;
  EXPECT_NEAR(std::fmod(a.radians(t), 2.0 * std::numbers::pi), expected, 1e-9);
}

TEST(ExactAngle, ArithmeticComposes) {
  const ExactAngle a(Rational(1, 4), -2);
  EXPECT_EQ(a.plus_half_steps(5).plus_turns(Rational(1)), ExactAngle(Rational(5, 4), 3));
  EXPECT_EQ(half_step_offset(a, a.plus_half_steps(9)), std::optional<std::int64_t>(9));
  EXPECT_FALSE(half_step_offset(a, ExactAngle(Rational(1, 3), 0)).has_value());
}

TEST(ExactAngle, ToStringShowsBothParts) {
  const std::string s = ExactAngle(Rational(3, 4), -5).to_string();
  EXPECT_NE(s.find("3/4"), std::string::npos);
  EXPECT_NE(s.find("-5"), std::string::npos);
}

TEST(ExactAngle, EnvironmentOverride) {
  ::setenv("ACHIEVE_T", "0.05", 1);
  EXPECT_DOUBLE_EQ(default_t(), 0.05);
  ::setenv("ACHIEVE_T", "0.2", 1);
  EXPECT_THROW(default_t(), DomainError);
  ::setenv("ACHIEVE_T", "abc", 1);
  EXPECT_THROW(default_t(), DomainError);
  ::unsetenv("ACHIEVE_T");
  EXPECT_DOUBLE_EQ(default_t(), kDefaultT);
}
