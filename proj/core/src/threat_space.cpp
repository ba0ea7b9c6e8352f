#include "achieve/threat_space.hpp"

#include <algorithm>

namespace achieve {

namespace {

struct Search {
  const GoalSet& goal;
  double eps;
  const ThreatSearchLimits& limits;
  std::size_t nodes = 0;

  std::vector<Vec2> completions(std::span<const PlanarPoint> a, std::span<const PlanarPoint> d) const {
    std::vector<Vec2> out;
    for (const auto& t : find_threats(a, d, goal, eps, Player::One)) {
      const Vec2 q = t.missing_point();
      if (std::none_of(out.begin(), out.end(), [&](Vec2 c) { return distance(c, q) <= 10.0 * eps; })) {
        out.push_back(q);
      }
    }
    return out;
  }

  std::vector<Vec2> candidates(std::span<const PlanarPoint> a, std::span<const PlanarPoint> d,
                               std::optional<Vec2> near) const {
    std::vector<Vec2> out;
    for (const auto& t : open_triples(a, d, goal, eps)) {
      for (std::size_t k = 0; k < 5; ++k) {
        if (t.member[k] >= 0) continue;
        const Vec2 q = t.points[k];
        if (near && distance(q, *near) > limits.locality) continue;
        if (std::none_of(out.begin(), out.end(), [&](Vec2 c) { return distance(c, q) <= eps; })) out.push_back(q);
      }
    }
    std::sort(out.begin(), out.end(), [](Vec2 x, Vec2 y) { return x.x != y.x ? x.x < y.x : x.y < y.y; });
    return out;
  }

  std::optional<std::vector<Vec2>> run(std::vector<PlanarPoint>& a, std::vector<PlanarPoint>& d, int depth,
                                       std::optional<Vec2> near) {
    for (Vec2 c : candidates(a, d, near)) {
      if (++nodes > limits.nodes) return std::nullopt;
      a.push_back(PlanarPoint::free(c));
      const auto done = completions(a, d);
      std::optional<std::vector<Vec2>> line;
      if (done.size() >= 2) {
        line = std::vector<Vec2>{c};
      } else if (done.size() == 1 && depth > 1) {
        d.push_back(PlanarPoint::free(done.front()));
        // A forced reply that threatens back breaks the sequence.
        if (find_threats(d, a, goal, eps, Player::Two).empty()) {
          if (auto rest = run(a, d, depth - 1, c)) {
            line = std::vector<Vec2>{c, done.front()};
            line->insert(line->end(), rest->begin(), rest->end());
          }
        }
        d.pop_back();
      }
      a.pop_back();
      if (line) return line;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<Vec2>> find_threat_win(std::span<const PlanarPoint> attacker,
                                                 std::span<const PlanarPoint> defender, const GoalSet& goal,
                                                 double eps, const ThreatSearchLimits& limits) {
  Search s{goal, eps, limits};
  std::vector<PlanarPoint> a(attacker.begin(), attacker.end());
  std::vector<PlanarPoint> d(defender.begin(), defender.end());
  if (auto now = s.completions(a, d); !now.empty()) return std::vector<Vec2>{now.front()};
  return s.run(a, d, limits.depth, std::nullopt);
}

}  // namespace achieve
