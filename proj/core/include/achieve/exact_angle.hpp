#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace achieve {

using Rational = boost::rational<std::int64_t>;

// Default irrational parameter: theta = t * pi with t = sqrt(2) / 16 < 1/9.
inline constexpr double kDefaultT = 0.088388347648318440550;

// Reads ACHIEVE_T from the environment, falling back to kDefaultT. Throws
// DomainError if the override is not in (0, 1/9).
double default_t();

/// Angle (base + half_steps * t / 2) * pi with rational base and integer count
/// of half-theta steps.
///
/// Because t is irrational two such angles coincide iff the bases agree mod 2
/// and the step counts agree, so equality is decided exactly.
class ExactAngle {
 public:
  ExactAngle() = default;
  ExactAngle(Rational base, std::int64_t half_steps);

  const Rational& base() const { return base_; }
  std::int64_t half_steps() const { return half_steps_; }

  ExactAngle plus_half_steps(std::int64_t k) const { return ExactAngle(base_, half_steps_ + k); }
  ExactAngle plus_turns(Rational r) const { return ExactAngle(base_ + r, half_steps_); }

  double radians(double t) const;

  std::string to_string() const;

  friend bool operator==(const ExactAngle&, const ExactAngle&) = default;

 private:
  Rational base_{0};  // normalized to [0, 2)
  std::int64_t half_steps_ = 0;
};

// Half-step difference b - a when both share a base, else nothing.
std::optional<std::int64_t> half_step_offset(const ExactAngle& a, const ExactAngle& b);

}  // namespace achieve
