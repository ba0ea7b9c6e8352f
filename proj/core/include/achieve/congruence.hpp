#pragma once

#include <array>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "achieve/geometry.hpp"
#include "achieve/hypergraph.hpp"

namespace achieve {

/// Uniform-grid bucket index over a fixed point list.
class PointIndex {
 public:
  explicit PointIndex(std::span<const Vec2> points, double cell = 0.5);

  std::span<const Vec2> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Closest point within `tol` of q.
  std::optional<std::size_t> nearest_within(Vec2 q, double tol) const;

  // Indices of all points within distance r of q, ascending.
  std::vector<std::size_t> within(Vec2 q, double r) const;

 private:
  std::int64_t key(std::int64_t cx, std::int64_t cy) const { return cx * 73856093LL ^ cy * 19349663LL; }
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }

  std::vector<Vec2> points_;
  double cell_;
  std::unordered_map<std::int64_t, std::vector<std::size_t>> buckets_;
};

enum class PointOwner : std::uint8_t { None, One, Two };

/// A congruent copy of the goal set, fitted to the points that lie on it.
struct CopyOfG {
  Vec2 center;
  double base = 0.0;
  int orientation = 1;
  std::array<Vec2, 5> points{};      // canonical order g1..g5
  std::array<int, 5> member{-1, -1, -1, -1, -1};  // index into the searched list, -1 when absent
  std::array<PointOwner, 5> tags{};
  double residual = 0.0;              // largest fitted distance over present points

  int present() const;
};

struct Threat {
  CopyOfG copy;
  Player owner = Player::One;
  std::size_t missing = 0;  // canonical label of the free point

  Vec2 missing_point() const { return copy.points[missing]; }
};

/// Every copy of the goal set with at least `min_present` (2..5) of its points
/// in `points`, each reported once. A copy is accepted when the least-squares
/// rigid fit of the template to its present points leaves every point within
/// eps. Candidates come from point pairs at template chord distance, so the
/// cost is linear in the number of such pairs rather than in 5-subsets.
std::vector<CopyOfG> enumerate_copies(std::span<const Vec2> points, const GoalSet& goal, double eps,
                                      int min_present);

std::vector<CopyOfG> find_copies(std::span<const PlanarPoint> points, const GoalSet& goal, double eps);

// Copies with exactly four points owned by `p_points`' player and the fifth
// more than eps away from every point of either player.
std::vector<Threat> find_threats(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                                 const GoalSet& goal, double eps, Player owner = Player::One);

// Copies with exactly three points in p_points and the other two free.
std::vector<CopyOfG> open_triples(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                                  const GoalSet& goal, double eps);

// Free points that would give the p_points player two threats with distinct
// completions. Sorted by (x, y).
std::vector<Vec2> fork_points(std::span<const PlanarPoint> p_points, std::span<const PlanarPoint> o_points,
                              const GoalSet& goal, double eps);

std::vector<Vec2> positions(std::span<const PlanarPoint> points);

// Some point of `points` lies within tol of q.
bool occupied(std::span<const PlanarPoint> points, Vec2 q, double tol);

}  // namespace achieve
