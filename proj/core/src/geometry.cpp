#include "achieve/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "achieve/errors.hpp"

namespace achieve {

PlanarPoint PlanarPoint::on_circle(int circle_id, Vec2 center, ExactAngle angle, double t) {
  const Vec2 p = center + unit_at(angle.radians(t));
  return {p.x, p.y, OnCircle{circle_id, center, angle, true}};
}

GoalSet::GoalSet(double t) : t_(t) {
  if (!(t > 0.0) || !(t < 1.0 / 9.0)) throw DomainError("goal parameter t must lie in (0, 1/9)");
}

Vec2 GoalSet::point(std::size_t k, Vec2 center, double base, int orientation) const {
  return center + unit_at(base + orientation * kHalfSteps.at(k) * half_step());
}

double GoalSet::chord(std::size_t a, std::size_t b) const {
  const int d = std::abs(kHalfSteps.at(a) - kHalfSteps.at(b));
  return 2.0 * std::sin(d * half_step() / 2.0);
}

PlanarPoint rotate_about(const PlanarPoint& center, const PlanarPoint& point, std::int64_t half_steps,
                         const GoalSet& goal) {
  const double a = std::fmod(static_cast<double>(half_steps) * goal.half_step(), 2.0 * std::numbers::pi);
  const Vec2 d = point.xy() - center.xy();
  const Vec2 r{d.x * std::cos(a) - d.y * std::sin(a), d.x * std::sin(a) + d.y * std::cos(a)};
  PlanarPoint out = PlanarPoint::free(center.xy() + r);
  if (point.on && distance(point.on->center, center.xy()) <= kEpsInternal) {
    OnCircle moved = *point.on;
    moved.angle = moved.angle.plus_half_steps(half_steps);
    out = PlanarPoint::on_circle(moved.circle_id, moved.center, moved.angle, goal.t());
    out.on->exact = point.on->exact;
  }
  return out;
}

std::array<PlanarPoint, 5> goal_points(const GoalSet& goal, const PlanarPoint& center, double base,
                                       int orientation) {
  if (orientation != 1 && orientation != -1) throw DomainError("orientation must be +1 or -1");
  std::array<PlanarPoint, 5> out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = PlanarPoint::free(goal.point(k, center.xy(), base, orientation));
  return out;
}

std::vector<Circle> unit_circles_through(const PlanarPoint& p, const PlanarPoint& q, double eps) {
  const Vec2 a = p.xy();
  const Vec2 b = q.xy();
  const double d = distance(a, b);
  if (d <= eps) throw DomainError("unit_circles_through: coincident points");
  const Vec2 mid = (a + b) * 0.5;
  if (std::abs(d - 2.0) <= eps) return {Circle{-1, mid}};
  if (d > 2.0) return {};
  const double h = std::sqrt(1.0 - d * d / 4.0);
  const Vec2 u = (b - a) * (1.0 / d);
  const Vec2 perp{-u.y, u.x};
  return {Circle{-1, mid + perp * h}, Circle{-1, mid - perp * h}};
}

double min_enclosing_radius(std::span<const Vec2> pts) {
  if (pts.empty() || pts.size() > 3) throw DomainError("min_enclosing_radius takes one to three points");
  if (pts.size() == 1) return 0.0;
  if (pts.size() == 2) return distance(pts[0], pts[1]) / 2.0;
  const double a = distance(pts[1], pts[2]);
  const double b = distance(pts[0], pts[2]);
  const double c = distance(pts[0], pts[1]);
  const double longest = std::max({a, b, c});
  const double s2 = a * a + b * b + c * c;
  // Right or obtuse (or degenerate): the longest side is a diameter.
  if (2.0 * longest * longest >= s2) return longest / 2.0;
  const double area2 = std::abs((pts[1] - pts[0]).cross(pts[2] - pts[0]));
  return a * b * c / (2.0 * area2);
}

bool safety_check(const PlanarPoint& h1, std::span<const PlanarPoint> p1_points,
                  std::span<const PlanarPoint> /*p2_points*/, double clearance, double ball_radius) {
  for (const auto& p : p1_points) {
    if (distance(p.xy(), h1.xy()) < clearance) return false;
  }
  const std::size_t n = p1_points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(p1_points[i].xy(), p1_points[j].xy()) > 2.0 * ball_radius) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        const std::array<Vec2, 3> tri{p1_points[i].xy(), p1_points[j].xy(), p1_points[k].xy()};
        if (min_enclosing_radius(tri) <= ball_radius) return false;
      }
    }
  }
  return true;
}

double angle_at(Vec2 center, Vec2 a, Vec2 b) {
  const Vec2 u = a - center;
  const Vec2 v = b - center;
  return std::atan2(std::abs(u.cross(v)), u.dot(v));
}

}  // namespace achieve
