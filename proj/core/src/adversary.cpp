#include "achieve/adversary.hpp"

#include <algorithm>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "achieve/congruence.hpp"
#include "achieve/errors.hpp"

namespace achieve {

std::string to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::Random: return "random";
    case AdversaryKind::ThreatGreedy: return "threat-greedy";
    case AdversaryKind::CircleSquatter: return "circle-squatter";
    case AdversaryKind::ForcingMimic: return "forcing-mimic";
  }
  return "?";
}

AdversaryKind adversary_from_string(std::string_view name) {
  for (auto k : {AdversaryKind::Random, AdversaryKind::ThreatGreedy, AdversaryKind::CircleSquatter,
                 AdversaryKind::ForcingMimic}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown adversary: " + std::string(name));
}

namespace {

constexpr double kEps = kEpsInternal;

bool taken(std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2, Vec2 q) {
  return occupied(p1, q, 1e-6) || occupied(p2, q, 1e-6);
}

Vec2 uniform_box(std::mt19937_64& rng, Vec2 center, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  const double x = u(rng);
  const double y = u(rng);
  return center + Vec2{x, y};
}

double uniform_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
}

PlanarPoint fresh(std::mt19937_64& rng, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                  Vec2 center, double half) {
  for (;;) {
    const Vec2 q = uniform_box(rng, center, half);
    if (!taken(p1, p2, q)) return PlanarPoint::free(q);
  }
}

PlanarPoint random_move(std::mt19937_64& rng, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2) {
  if (!p2.empty() && std::bernoulli_distribution(0.5)(rng)) {
    return fresh(rng, p1, p2, p2.back().xy(), 12.0);
  }
  return fresh(rng, p1, p2, {0.0, 0.0}, 60.0);
}

// Free point that adds the most to a copy P1 can still finish.
PlanarPoint greedy_move(std::mt19937_64& rng, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                        const GoalSet& goal) {
  const auto mine = positions(p1);
  int best = 0;
  std::vector<Vec2> options;
  if (mine.size() >= 2) {
    for (const auto& copy : enumerate_copies(mine, goal, kEps, 2)) {
      bool open = true;
      std::vector<Vec2> gaps;
      for (std::size_t k = 0; k < 5; ++k) {
        if (copy.member[k] >= 0) continue;
        if (occupied(p2, copy.points[k], 1e-6)) {
          open = false;
          break;
        }
        gaps.push_back(copy.points[k]);
      }
      if (!open || gaps.empty()) continue;
      const int score = copy.present() + 1;
      if (score > best) {
        best = score;
        options.clear();
      }
      if (score == best) options.insert(options.end(), gaps.begin(), gaps.end());
    }
  }
  if (!options.empty()) {
    std::sort(options.begin(), options.end(), [](Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    const auto pick = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng);
    return PlanarPoint::free(options[pick]);
  }
  if (!p1.empty()) {
    // Start a new pair at chord theta from the latest point.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Vec2 q = p1.back().xy();
      const Vec2 c = q + unit_at(uniform_angle(rng));
      const Vec2 d = q - c;
      const double th = goal.theta();
      const Vec2 r = c + Vec2{d.x * std::cos(th) - d.y * std::sin(th), d.x * std::sin(th) + d.y * std::cos(th)};
      if (!taken(p1, p2, r)) return PlanarPoint::free(r);
    }
  }
  return fresh(rng, p1, p2, {0.0, 0.0}, 20.0);
}

// Plays on the lattice of the bot's latest exact circle.
PlanarPoint squat_move(std::mt19937_64& rng, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                       const GoalSet& goal) {
  const PlanarPoint* anchor = nullptr;
  for (auto it = p2.rbegin(); it != p2.rend(); ++it) {
    if (it->on && it->on->exact) {
      anchor = &*it;
      break;
    }
  }
  if (anchor == nullptr) return fresh(rng, p1, p2, {0.0, 0.0}, 20.0);
  const OnCircle& on = *anchor->on;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const auto k = std::uniform_int_distribution<std::int64_t>(-9, 9)(rng);
    const PlanarPoint q = PlanarPoint::on_circle(on.circle_id, on.center, on.angle.plus_half_steps(k), goal.t());
    if (!taken(p1, p2, q.xy())) return q;
  }
  for (;;) {
    const Vec2 q = on.center + unit_at(uniform_angle(rng));
    if (!taken(p1, p2, q)) return PlanarPoint::free(q);
  }
}

// Runs its own theta progression, the same forcing pattern the bot uses.
PlanarPoint mimic_move(std::mt19937_64& rng, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                       const GoalSet& goal) {
  std::optional<Vec2> center;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const auto& p : p1) {
    if (!p.on || p.on->circle_id != kAdversaryCircleId) continue;
    const std::int64_t k = p.on->angle.half_steps();
    if (!center) {
      center = p.on->center;
      lo = hi = k;
    }
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  if (center) {
    for (std::int64_t k : {hi + 2, lo - 2}) {
      const PlanarPoint q = PlanarPoint::on_circle(kAdversaryCircleId, *center, ExactAngle(0, k), goal.t());
      if (!taken(p1, p2, q.xy())) return q;
    }
    return random_move(rng, p1, p2);
  }
  const Vec2 origin = p2.empty() ? Vec2{0.0, 0.0} : p2.back().xy();
  for (int attempt = 0; attempt < 64; ++attempt) {
    const double r = std::uniform_real_distribution<double>(6.0, 12.0)(rng);
    const Vec2 c = origin + unit_at(uniform_angle(rng)) * r;
    const PlanarPoint q = PlanarPoint::on_circle(kAdversaryCircleId, c, ExactAngle(0, 0), goal.t());
    if (!taken(p1, p2, q.xy())) return q;
  }
  return random_move(rng, p1, p2);
}

}  // namespace

PlanarPoint adversary_move(AdversaryKind kind, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                           const GoalSet& goal, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (p1.size() + 1)));
  if (auto own = find_threats(p1, p2, goal, kEps, Player::One); !own.empty()) {
    return PlanarPoint::free(own.front().missing_point());
  }
  if (auto bot = find_threats(p2, p1, goal, kEps, Player::Two); !bot.empty()) {
    return PlanarPoint::free(bot.front().missing_point());
  }
  switch (kind) {
    case AdversaryKind::Random: return random_move(rng, p1, p2);
    case AdversaryKind::ThreatGreedy: return greedy_move(rng, p1, p2, goal);
    case AdversaryKind::CircleSquatter: return squat_move(rng, p1, p2, goal);
    case AdversaryKind::ForcingMimic: return mimic_move(rng, p1, p2, goal);
  }
  return random_move(rng, p1, p2);
}

}  // namespace achieve
