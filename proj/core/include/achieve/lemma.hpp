#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "achieve/geometry.hpp"

namespace achieve {

/// Three pairwise-intersecting unit circles with their intersection points.
///
/// For i < j, `x[i][j]` is the intersection on the left of the directed line
/// c_i -> c_j and `y[i][j]` the one on the right; both arrays are symmetric.
struct TripleCircleConfig {
  std::array<Vec2, 3> centers{};
  std::array<std::array<Vec2, 3>, 3> x{};
  std::array<std::array<Vec2, 3>, 3> y{};
  // angles[i][j] = angle x_ij c_i y_ik where k is the third index.
  std::array<std::array<double, 3>, 3> angles{};

  // Angle subtended at c_i by the two intersection points with C_j.
  double chord_angle(int i, int j) const;
  double max_angle() const;
  // Smallest max_angle over the 8 ways of naming which intersection of each
  // pair is x and which is y.
  double min_max_angle_over_labelings() const;
};

// Throws DomainError unless every pair of centers is at distance in (0, 2).
TripleCircleConfig triple_config_angles(Vec2 c1, Vec2 c2, Vec2 c3);

struct LemmaReport {
  std::uint64_t samples = 0;
  std::uint64_t valid_samples = 0;       // equals samples on return
  std::uint64_t skipped_degenerate = 0;  // redrawn: some pair of circles does not cross
  std::uint64_t descents = 0;
  double min_over_samples_of_max_angle = 0.0;
  std::array<Vec2, 3> best_centers{};
  // Largest arc between the two tangent points from c_i on C_j, over all
  // sampled pairs with |c_i - c_j| >= 1. Reported only.
  double max_tangent_arc = 0.0;
  std::optional<std::array<Vec2, 3>> counterexample;
};

// Random sampling followed by local descent on the most promising samples,
// minimising the labelling-minimised maximum angle. A counterexample is
// reported only when all six angles are below pi/3 - 1e-9.
LemmaReport lemma_search(std::uint64_t samples, std::uint64_t seed);

}  // namespace achieve
