#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "achieve/exact_angle.hpp"

namespace achieve {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline Vec2 unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Exact position on a unit circle.
struct OnCircle {
  int circle_id = -1;
  Vec2 center;
  ExactAngle angle;
  // False when the angle was fitted to a human click rather than constructed.
  bool exact = true;

  friend bool operator==(const OnCircle&, const OnCircle&) = default;
};

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
  std::optional<OnCircle> on;

  Vec2 xy() const { return {x, y}; }
  static PlanarPoint free(Vec2 p) { return {p.x, p.y, std::nullopt}; }
  static PlanarPoint on_circle(int circle_id, Vec2 center, ExactAngle angle, double t);

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

// Unit circle; the radius is fixed at 1.
struct Circle {
  int id = -1;
  Vec2 center;

  friend bool operator==(const Circle&, const Circle&) = default;
};

/// The irrational pentagon: five points on a unit circle at angles
/// 0, theta, 3theta/2, 2theta, 3theta, labelled g1, g2, g5, g3, g4.
class GoalSet {
 public:
  // Canonical label order g1..g5 as half-theta offsets.
  static constexpr std::array<int, 5> kHalfSteps{0, 2, 4, 6, 3};
  static constexpr std::size_t kMiddle = 4;

  explicit GoalSet(double t = default_t());

  double t() const { return t_; }
  double theta() const { return t_ * 3.14159265358979323846; }
  double half_step() const { return theta() / 2.0; }

  // Position of label k in a copy with the given center, base angle and orientation.
  Vec2 point(std::size_t k, Vec2 center, double base, int orientation) const;

  // Chord length between labels a and b.
  double chord(std::size_t a, std::size_t b) const;

  // Largest chord of the set (distance g1-g4).
  double diameter() const { return chord(0, 3); }

 private:
  double t_;
};

constexpr double kEpsInternal = 1e-9;
constexpr double kEpsHuman = 1e-6;
constexpr double kSnapTolerance = 1e-6;

// Rotation about `center` by k * theta / 2. Exact provenance is carried along
// when the point sits on a circle centred at `center`.
PlanarPoint rotate_about(const PlanarPoint& center, const PlanarPoint& point, std::int64_t half_steps,
                         const GoalSet& goal);

// Canonical labelled points g1..g5 of one copy.
std::array<PlanarPoint, 5> goal_points(const GoalSet& goal, const PlanarPoint& center, double base,
                                       int orientation);

// All unit circles through p and q: 2, 1 (diametral, within eps) or 0.
// Throws DomainError for coincident points.
std::vector<Circle> unit_circles_through(const PlanarPoint& p, const PlanarPoint& q, double eps = kEpsInternal);

// Smallest enclosing circle radius of one to three points. Throws DomainError
// on empty or larger input.
double min_enclosing_radius(std::span<const Vec2> points);

// h1 is at least `clearance` from every P1 point and no three P1 points fit
// in a closed ball of radius `ball_radius`.
bool safety_check(const PlanarPoint& h1, std::span<const PlanarPoint> p1_points,
                  std::span<const PlanarPoint> p2_points, double clearance = 10.0, double ball_radius = 10.0);

// Angle at `center` between a and b, in [0, pi].
double angle_at(Vec2 center, Vec2 a, Vec2 b);

}  // namespace achieve
