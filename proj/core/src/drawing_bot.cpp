#include "achieve/drawing_bot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "achieve/errors.hpp"
#include "achieve/threat_space.hpp"

namespace achieve {

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::Retreat: return "Retreat";
    case Phase::Build: return "Build";
    case Phase::Force: return "Force";
    case Phase::BlockResponse: return "BlockResponse";
  }
  return "?";
}

ExactAngle Progression::next_middle() const {
  // The new copy spans j in {hi-2, hi-1, hi-1/2, hi, hi+1} going up, or the
  // mirror image going down; its middle is half a step inside the old end.
  const std::int64_t half = step / 2;
  if (direction >= 0) return anchor.plus_half_steps(static_cast<std::int64_t>(step) * hi - half);
  return anchor.plus_half_steps(static_cast<std::int64_t>(step) * lo + half);
}

namespace {

double wrap_pi(double a) {
  a = std::fmod(a + std::numbers::pi, 2.0 * std::numbers::pi);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a - std::numbers::pi;
}

double polar_angle(Vec2 center, Vec2 p) {
  const Vec2 d = p - center;
  return std::atan2(d.y, d.x);
}

}  // namespace

std::optional<std::int64_t> lattice_offset(const PlanarPoint& p, const PlanarPoint& origin, Vec2 center,
                                           const GoalSet& goal, double tol, int max_offset) {
  if (p.on && origin.on && p.on->exact && origin.on->exact && distance(p.on->center, center) <= kEpsInternal &&
      distance(origin.on->center, center) <= kEpsInternal) {
    return half_step_offset(origin.on->angle, p.on->angle);
  }
  if (std::abs(distance(p.xy(), center) - 1.0) > tol) return std::nullopt;
  const double delta = wrap_pi(polar_angle(center, p.xy()) - polar_angle(center, origin.xy()));
  const double hs = goal.half_step();
  for (std::int64_t k = 0; k <= max_offset; ++k) {
    for (std::int64_t cand : {k, -k}) {
      if (std::abs(wrap_pi(delta - static_cast<double>(cand) * hs)) <= tol) return cand;
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<PlanarPoint> with_point(std::span<const PlanarPoint> pts, const PlanarPoint& extra) {
  std::vector<PlanarPoint> out(pts.begin(), pts.end());
  out.push_back(extra);
  return out;
}

PlanarPoint point_of(const Progression& pr, int j, const GoalSet& goal) {
  return PlanarPoint::on_circle(pr.circle_id, pr.center, pr.angle_at(j), goal.t());
}

// Attach exact provenance when q lies on the active progression's lattice.
PlanarPoint annotate(const BotState& s, Vec2 q, const BotConfig& cfg) {
  PlanarPoint out = PlanarPoint::free(q);
  if (!s.progression) return out;
  const Progression& pr = *s.progression;
  if (std::abs(distance(q, pr.center) - 1.0) > cfg.eps) return out;
  const PlanarPoint origin = point_of(pr, 0, cfg.goal);
  if (auto k = lattice_offset(out, origin, pr.center, cfg.goal, 1e-9, cfg.lattice_search)) {
    PlanarPoint exact = PlanarPoint::on_circle(pr.circle_id, pr.center, pr.anchor.plus_half_steps(*k), cfg.goal.t());
    if (distance(exact.xy(), q) <= cfg.eps) return exact;
  }
  return out;
}

bool is_taken(std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2, Vec2 q, const BotConfig& cfg) {
  const double tol = std::max(cfg.eps, cfg.snap);
  return occupied(p1, q, tol) || occupied(p2, q, tol);
}

bool locally_safe(const PlanarPoint& h1, std::span<const PlanarPoint> p1, const BotConfig& cfg) {
  std::vector<PlanarPoint> near;
  for (const auto& p : p1) {
    const double d = distance(p.xy(), h1.xy());
    if (d < cfg.safety_clearance) return false;
    if (d <= cfg.safety_neighbourhood) near.push_back(p);
  }
  return safety_check(h1, near, {}, cfg.safety_clearance, cfg.safety_ball);
}

PlanarPoint retreat_point(BotState& s, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                          const BotConfig& cfg) {
  double reach = 0.0;
  for (const auto& p : p1) reach = std::max(reach, p.xy().norm());
  for (const auto& p : p2) reach = std::max(reach, p.xy().norm());
  const double radius = cfg.retreat_clearance + 1.0 + reach;
  // Golden-angle rotation keeps successive retreat points apart.
  const double angle = std::fmod(s.retreats * 2.399963229728653, 2.0 * std::numbers::pi);
  ++s.retreats;
  s.phase = Phase::Retreat;
  s.progression.reset();
  s.h.clear();
  return PlanarPoint::free(unit_at(angle) * radius);
}

// Picks c on the unit circle around h1 so that C keeps clear of P1.
void designate_center(BotState& s, const PlanarPoint& h1, std::span<const PlanarPoint> p1, const BotConfig& cfg) {
  constexpr int kDirections = 32;
  int best_j = 0;
  double best_clearance = -1.0;
  for (int j = 0; j < kDirections; ++j) {
    const double alpha = 2.0 * std::numbers::pi * j / kDirections;
    const Vec2 c = h1.xy() - unit_at(alpha);
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& p : p1) clearance = std::min(clearance, std::abs(distance(p.xy(), c) - 1.0));
    if (clearance > best_clearance + 1e-12) {
      best_clearance = clearance;
      best_j = j;
    }
  }
  Progression pr;
  pr.circle_id = s.next_circle_id++;
  // h1 sits at angle 2*pi*j/32 = (j/16) pi from c.
  pr.anchor = ExactAngle(Rational(best_j, kDirections / 2), 0);
  pr.center = h1.xy() - unit_at(pr.anchor.radians(cfg.goal.t()));
  pr.step = 2;
  pr.lo = 0;
  pr.hi = 0;
  s.progression = pr;
  s.h = {point_of(pr, 0, cfg.goal)};
  s.phase = Phase::Build;
  s.stage = BuildStage::PlacedH1;
}

// Conditions that must hold when it becomes P1's move with h1..h3 placed.
std::optional<std::string> star_violation(std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                                          Vec2 center, const BotConfig& cfg) {
  int near_center = 0;
  for (const auto& p : p1) {
    if (distance(p.xy(), center) <= cfg.star_radius) ++near_center;
  }
  if (near_center > 1) return "P1 holds " + std::to_string(near_center) + " points near c";
  const auto triples = open_triples(p1, p2, cfg.goal, cfg.eps);
  if (triples.size() > 1) return "P1 has " + std::to_string(triples.size()) + " open triples";
  if (triples.size() == 1) {
    const CopyOfG& t = triples.front();
    for (std::size_t i = 0; i < p1.size(); ++i) {
      if (std::find(t.member.begin(), t.member.end(), static_cast<int>(i)) != t.member.end()) continue;
      for (int m : t.member) {
        if (m >= 0 && distance(p1[i].xy(), p1[static_cast<std::size_t>(m)].xy()) <= cfg.star_star_radius) {
          return std::string("P1 point near its open triple");
        }
      }
    }
  }
  return std::nullopt;
}

int on_circle_count(std::span<const PlanarPoint> p1, Vec2 center, const BotConfig& cfg) {
  int n = 0;
  for (const auto& p : p1) {
    if (std::abs(distance(p.xy(), center) - 1.0) <= cfg.snap) ++n;
  }
  return n;
}

// Would forcing in `direction` hand P1 a threat through the middles it is forced to take?
bool forecast_safe(const Progression& base, int direction, std::span<const PlanarPoint> p1,
                   std::span<const PlanarPoint> p2, const BotConfig& cfg) {
  Progression pr = base;
  pr.direction = direction;
  std::vector<PlanarPoint> p1_future(p1.begin(), p1.end());
  std::vector<PlanarPoint> p2_future(p2.begin(), p2.end());
  for (int m = 0; m < cfg.forecast_horizon; ++m) {
    const int j = pr.next_index();
    p1_future.push_back(PlanarPoint::on_circle(pr.circle_id, pr.center, pr.next_middle(), cfg.goal.t()));
    p2_future.push_back(point_of(pr, j, cfg.goal));
    if (direction > 0) {
      pr.hi = j;
    } else {
      pr.lo = j;
    }
  }
  if (!find_copies(p1_future, cfg.goal, cfg.eps).empty()) return false;
  return find_threats(p1_future, p2_future, cfg.goal, cfg.eps, Player::One).empty();
}

// Side of h2 (along increasing j) on which P1 holds a lattice point.
std::pair<bool, bool> lattice_blocked(const Progression& pr, std::span<const PlanarPoint> p1, const BotConfig& cfg) {
  bool up = false;
  bool down = false;
  const PlanarPoint h2 = point_of(pr, 1, cfg.goal);
  for (const auto& p : p1) {
    if (std::abs(distance(p.xy(), pr.center) - 1.0) > cfg.snap) continue;
    auto k = lattice_offset(p, h2, pr.center, cfg.goal, cfg.snap, cfg.lattice_search);
    if (!k) continue;
    const std::int64_t along = *k * (pr.step > 0 ? 1 : -1);
    if (along > 0) up = true;
    if (along < 0) down = true;
  }
  return {up, down};
}

void check_forcing(BotState& s, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2_after,
                   const Progression& pr, const ExactAngle& middle, const BotConfig& cfg) {
  const auto own = find_threats(p2_after, p1, cfg.goal, cfg.eps, Player::Two);
  const Vec2 expected = PlanarPoint::on_circle(pr.circle_id, pr.center, middle, cfg.goal.t()).xy();
  if (own.size() != 1 || distance(own.front().missing_point(), expected) > 10.0 * cfg.eps) {
    s.violations.push_back("forcing move left " + std::to_string(own.size()) +
                           " bot threats instead of one at the middle point");
  }
}

std::optional<PlanarPoint> extend(BotState& s, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                                  const BotConfig& cfg) {
  Progression& pr = *s.progression;
  const int j = pr.next_index();
  const ExactAngle middle = pr.next_middle();
  const PlanarPoint point = point_of(pr, j, cfg.goal);
  const Vec2 mid = PlanarPoint::on_circle(pr.circle_id, pr.center, middle, cfg.goal.t()).xy();
  if (is_taken(p1, p2, point.xy(), cfg) || is_taken(p1, p2, mid, cfg)) return std::nullopt;
  if (pr.direction > 0) {
    pr.hi = j;
  } else {
    pr.lo = j;
  }
  s.h.push_back(point);
  check_forcing(s, p1, with_point(p2, point), pr, middle, cfg);
  return point;
}

PlanarPoint build_step(BotState& s, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                       const BotConfig& cfg) {
  Progression& pr = *s.progression;
  switch (s.stage) {
    case BuildStage::PlacedH1: {
      pr.hi = 1;
      const PlanarPoint h2 = point_of(pr, 1, cfg.goal);
      s.h.push_back(h2);
      s.stage = BuildStage::PlacedH2;
      return h2;
    }
    case BuildStage::PlacedH2: {
      // h1 and h2 lie on exactly two unit circles; move off the one P1 just used.
      if (!p1.empty() && std::abs(distance(p1.back().xy(), pr.center) - 1.0) <= cfg.snap) {
        const Vec2 h1 = s.h.at(0).xy();
        const Vec2 h2 = s.h.at(1).xy();
        Progression other = pr;
        other.circle_id = s.next_circle_id++;
        other.center = h1 + h2 - pr.center;
        other.anchor = pr.anchor.plus_turns(1).plus_half_steps(pr.step);
        other.step = -pr.step;
        if (on_circle_count(p1, other.center, cfg) > 0) {
          s.notes.push_back("build abandoned: P1 holds points on both circles through h1, h2");
          return retreat_point(s, p1, p2, cfg);
        }
        pr = other;
        s.h[0] = point_of(pr, 0, cfg.goal);
        s.h[1] = point_of(pr, 1, cfg.goal);
        s.notes.push_back("P1 answered on C; switched to the second circle through h1, h2");
      }
      const PlanarPoint h3 = point_of(pr, 2, cfg.goal);
      if (is_taken(p1, p2, h3.xy(), cfg)) {
        s.notes.push_back("build abandoned: h3 occupied");
        return retreat_point(s, p1, p2, cfg);
      }
      // P1's points are permanent, so neither retreating nor breaking triples
      // one at a time restores a failed precondition; both hand P1 free
      // moves. Record it and keep forcing.
      if (auto why = star_violation(p1, with_point(p2, h3), pr.center, cfg)) {
        s.notes.push_back("precondition not met: " + *why);
      }
      pr.hi = 2;
      s.h.push_back(h3);
      s.stage = BuildStage::PlacedH3;
      return h3;
    }
    case BuildStage::PlacedH3: {
      const auto [up_blocked, down_blocked] = lattice_blocked(pr, p1, cfg);
      int chosen = 0;
      for (int d : {1, -1}) {
        const bool blocked = d > 0 ? up_blocked : down_blocked;
        if (!blocked && forecast_safe(pr, d, p1, p2, cfg)) {
          chosen = d;
          break;
        }
      }
      if (chosen == 0) {
        s.violations.push_back("no forcing direction is free of P1 lattice points and forecast threats");
        chosen = !up_blocked ? 1 : -1;
      }
      pr.direction = chosen;
      s.phase = Phase::Force;
      if (auto p = extend(s, p1, p2, cfg)) return *p;
      s.notes.push_back("build abandoned: first forcing point occupied");
      return retreat_point(s, p1, p2, cfg);
    }
  }
  return retreat_point(s, p1, p2, cfg);
}

// Build or retreat move, computed on a copy of the state.
std::pair<PlanarPoint, BotState> plan_quiet_move(BotState s, std::span<const PlanarPoint> p1,
                                                 std::span<const PlanarPoint> p2, const BotConfig& cfg) {
  if (s.phase == Phase::Build) {
    PlanarPoint p = build_step(s, p1, p2, cfg);
    return {std::move(p), std::move(s)};
  }
  // Retreat: look for a safe h1 among our most recent points.
  const std::size_t lookback = std::min<std::size_t>(p2.size(), 8);
  for (std::size_t back = 1; back <= lookback; ++back) {
    const PlanarPoint& candidate = p2[p2.size() - back];
    if (!locally_safe(candidate, p1, cfg)) continue;
    designate_center(s, candidate, p1, cfg);
    if (distance(s.h.front().xy(), candidate.xy()) > 1e-9) {
      throw StateError("designated circle does not pass through h1");
    }
    PlanarPoint p = build_step(s, p1, p2, cfg);
    return {std::move(p), std::move(s)};
  }
  PlanarPoint p = retreat_point(s, p1, p2, cfg);
  return {std::move(p), std::move(s)};
}

}  // namespace

std::pair<PlanarPoint, BotState> bot_move(const BotState& state, std::span<const PlanarPoint> p1,
                                          std::span<const PlanarPoint> p2, const BotConfig& cfg) {
  BotState s = state;
  if (p2.size() != s.own_points) {
    throw StateError("bot ledger holds " + std::to_string(s.own_points) + " points but " +
                     std::to_string(p2.size()) + " were supplied");
  }
  if (p1.size() != p2.size() + 1) throw StateError("bot_move called when it is not Player 2's move");
  auto emit = [&s](PlanarPoint p) {
    ++s.own_points;
    return std::pair<PlanarPoint, BotState>{std::move(p), std::move(s)};
  };
  const GoalSet& goal = cfg.goal;

  // P1 left one of our threats open: complete it.
  if (auto own = find_threats(p2, p1, goal, cfg.eps, Player::Two); !own.empty()) {
    s.won = true;
    return emit(annotate(s, own.front().missing_point(), cfg));
  }

  if (auto threats = find_threats(p1, p2, goal, cfg.eps, Player::One); !threats.empty()) {
    std::vector<Vec2> completions;
    for (const auto& t : threats) {
      const Vec2 q = t.missing_point();
      const bool known = std::any_of(completions.begin(), completions.end(),
                                     [&](Vec2 c) { return distance(c, q) <= 10.0 * cfg.eps; });
      if (!known) completions.push_back(q);
    }
    if (completions.size() > 1) {
      s.violations.push_back("P1 holds " + std::to_string(completions.size()) +
                             " simultaneous threats with distinct completions");
    }
    const Threat& t = threats.front();
    if (s.p1_forcing_circle && distance(*s.p1_forcing_circle, t.copy.center) > 1e-6) {
      s.notes.push_back("P1 moved its forcing to another circle");
    }
    s.p1_forcing_circle = t.copy.center;
    if (s.phase != Phase::BlockResponse) {
      s.resume = s.phase;
      s.phase = Phase::BlockResponse;
    }
    s.pending_threat = t;
    s.last_blocked = t.copy;
    return emit(annotate(s, t.missing_point(), cfg));
  }
  if (s.phase == Phase::BlockResponse) {
    s.phase = s.resume;
    s.pending_threat.reset();
  }

  if (s.phase == Phase::Force) {
    if (auto p = extend(s, p1, p2, cfg)) return emit(*p);
    s.notes.push_back("forcing chain interrupted; restarting from retreat");
    s.phase = Phase::Retreat;
    s.progression.reset();
    s.h.clear();
  }

  if (auto forks = fork_points(p1, p2, goal, cfg.eps); !forks.empty()) {
    return emit(annotate(s, forks.front(), cfg));
  }

  auto planned = plan_quiet_move(s, p1, p2, cfg);
  const std::vector<PlanarPoint> after = with_point(p2, planned.first);
  if (!find_threats(after, p1, goal, cfg.eps, Player::Two).empty()) {
    planned.second.own_points = s.own_points;
    s = std::move(planned.second);
    return emit(std::move(planned.first));
  }
  // A quiet move gives P1 a free tempo. Make sure P1 cannot cash it in with a
  // sequence of single threats that ends in a fork.
  if (auto line = find_threat_win(p1, after, goal, cfg.eps, cfg.threat_search)) {
    for (Vec2 q : *line) {
      if (is_taken(p1, p2, q, cfg)) continue;
      if (!find_threat_win(p1, with_point(p2, PlanarPoint::free(q)), goal, cfg.eps, cfg.threat_search)) {
        s.notes.push_back("pre-empted a P1 threat sequence");
        return emit(annotate(s, q, cfg));
      }
    }
    s.notes.push_back("no single point refutes P1's threat sequence");
    return emit(annotate(s, line->front(), cfg));
  }
  planned.second.own_points = s.own_points;
  s = std::move(planned.second);
  return emit(std::move(planned.first));
}

}  // namespace achieve
