#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "achieve/geometry.hpp"

namespace achieve {

enum class AdversaryKind : std::uint8_t { Random, ThreatGreedy, CircleSquatter, ForcingMimic };

std::string to_string(AdversaryKind kind);
// Accepts "random", "threat-greedy", "circle-squatter", "forcing-mimic".
AdversaryKind adversary_from_string(std::string_view name);

// Circle id used by ForcingMimic for its own progression.
inline constexpr int kAdversaryCircleId = 1000;

/// Player 1's next point. Deterministic in (kind, positions, seed). Every kind
/// completes its own threat when it has one and otherwise blocks the bot's.
PlanarPoint adversary_move(AdversaryKind kind, std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2,
                           const GoalSet& goal, std::uint64_t seed);

}  // namespace achieve
