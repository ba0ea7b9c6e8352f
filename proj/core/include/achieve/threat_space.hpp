#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "achieve/congruence.hpp"

namespace achieve {

struct ThreatSearchLimits {
  int depth = 3;           // attacker moves, including the one that forks
  std::size_t nodes = 4000;  // search budget; the search gives up (no line) beyond it
  // Below the root, only gaps of open triples within this distance of the
  // attacker's previous move are tried.
  double locality = 2.0;
};

/// A continuous-threat win for the player owning `attacker`, who is to move:
/// every attacker move but the last makes exactly one threat (so the reply is
/// forced) and the last makes two with distinct completions. Returns the line
/// as attacker, reply, attacker, reply, ..., attacker.
std::optional<std::vector<Vec2>> find_threat_win(std::span<const PlanarPoint> attacker,
                                                 std::span<const PlanarPoint> defender, const GoalSet& goal,
                                                 double eps, const ThreatSearchLimits& limits = {});

}  // namespace achieve
