#include "achieve/exact_angle.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "achieve/errors.hpp"

namespace achieve {

double default_t() {
  if (const char* env = std::getenv("ACHIEVE_T"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double t = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(t > 0.0) || !(t < 1.0 / 9.0)) {
      throw DomainError("ACHIEVE_T must be a number in (0, 1/9)");
    }
    return t;
  }
  return kDefaultT;
}

ExactAngle::ExactAngle(Rational base, std::int64_t half_steps) : half_steps_(half_steps) {
  // Reduce base into [0, 2).
  const std::int64_t num = base.numerator();
  const std::int64_t den = base.denominator();
  std::int64_t rem = num % (2 * den);
  if (rem < 0) rem += 2 * den;
  base_ = Rational(rem, den);
}

double ExactAngle::radians(double t) const {
  const double b = static_cast<double>(base_.numerator()) / static_cast<double>(base_.denominator());
  // Reduce the step part separately so large counts keep precision.
  const double steps = std::fmod(static_cast<double>(half_steps_) * t / 2.0, 2.0);
  return (b + steps) * std::numbers::pi;
}

std::string ExactAngle::to_string() const {
  return std::to_string(base_.numerator()) + "/" + std::to_string(base_.denominator()) + "pi + " +
         std::to_string(half_steps_) + " half-theta";
}

std::optional<std::int64_t> half_step_offset(const ExactAngle& a, const ExactAngle& b) {
  if (a.base() != b.base()) return std::nullopt;
  return b.half_steps() - a.half_steps();
}

}  // namespace achieve
