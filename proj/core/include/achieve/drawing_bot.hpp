#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "achieve/congruence.hpp"
#include "achieve/geometry.hpp"
#include "achieve/threat_space.hpp"

namespace achieve {

enum class Phase : std::uint8_t { Retreat, Build, Force, BlockResponse };
enum class BuildStage : std::uint8_t { PlacedH1, PlacedH2, PlacedH3 };

std::string phase_name(Phase p);

struct BotConfig {
  GoalSet goal{};
  double eps = kEpsInternal;
  // P1 points within this distance of a circle count as lying on it.
  double snap = kSnapTolerance;
  double retreat_clearance = 30.0;
  // h1 safety: distance to P1 and the ball radius for the "at most two P1
  // points per ball" condition.
  double safety_clearance = 10.0;
  double safety_ball = 10.0;
  // Only P1 points this close to h1 enter the ball condition.
  double safety_neighbourhood = 30.0;
  // P1 may hold at most one point this close to c before h3 is placed.
  double star_radius = 8.0;
  // Isolation radius around P1's single open triple.
  double star_star_radius = 5.0;
  // Forced middle points simulated when committing a forcing direction.
  int forecast_horizon = 200;
  // Largest half-step offset considered when matching an inexact point to the
  // half-theta lattice of the active circle.
  int lattice_search = 4000;
  // P1 continuous-threat search run before every quiet move.
  ThreatSearchLimits threat_search{};
};

/// Theta-spaced run of bot points on the active circle. Point j sits at
/// anchor + j * step half-steps (step is +2 or -2); the bot holds j in [lo, hi].
struct Progression {
  int circle_id = -1;
  Vec2 center;
  ExactAngle anchor;
  int step = 2;
  int lo = 0;
  int hi = 0;
  // +1 extends past hi, -1 below lo. 0 until the forcing direction is chosen.
  int direction = 0;

  ExactAngle angle_at(int j) const { return anchor.plus_half_steps(static_cast<std::int64_t>(j) * step); }
  // Middle point of the copy created by the next extension.
  ExactAngle next_middle() const;
  int next_index() const { return direction >= 0 ? hi + 1 : lo - 1; }
};

struct BotState {
  Phase phase = Phase::Retreat;
  BuildStage stage = BuildStage::PlacedH1;
  // Phase to return to after a BlockResponse.
  Phase resume = Phase::Retreat;

  std::optional<Progression> progression;
  // h1, h2, ... in placement order, with provenance.
  std::vector<PlanarPoint> h;

  std::size_t own_points = 0;  // ledger: number of P2 points the bot has placed
  int retreats = 0;
  int next_circle_id = 1;

  // Watchlist: center of the circle P1 is forcing on, if any.
  std::optional<Vec2> p1_forcing_circle;
  std::optional<CopyOfG> last_blocked;
  std::optional<Threat> pending_threat;

  // Monitored invariants that fired. Expected to stay empty.
  std::vector<std::string> violations;
  // Non-fatal notes (restarts after a failed precondition).
  std::vector<std::string> notes;
  bool won = false;
};

/// Player 2's drawing strategy as a deterministic phase machine.
///
/// Priority per move: complete our own unblocked copy if P1 failed to answer a
/// threat; block any P1 threat; continue forcing; otherwise pre-empt P1 fork
/// points, then retreat / build. The returned point is a pure function of the
/// inputs. Throws StateError when `p2` does not match the ledger or it is not
/// P2's move.
std::pair<PlanarPoint, BotState> bot_move(const BotState& state, std::span<const PlanarPoint> p1,
                                          std::span<const PlanarPoint> p2, const BotConfig& config);

// Convenience holder for one game.
class DrawingBot {
 public:
  explicit DrawingBot(BotConfig config = {}) : config_(std::move(config)) {}

  PlanarPoint move(std::span<const PlanarPoint> p1, std::span<const PlanarPoint> p2) {
    auto [point, next] = bot_move(state_, p1, p2, config_);
    state_ = std::move(next);
    return point;
  }

  const BotState& state() const { return state_; }
  BotState& mutable_state() { return state_; }
  const BotConfig& config() const { return config_; }

 private:
  BotConfig config_;
  BotState state_;
};

// Half-step offset of `p` from `origin` along the circle (center, both on it),
// when p lies on the half-theta lattice through origin. Uses exact provenance
// when both carry it, otherwise searches |k| <= max_offset within `tol` radians.
std::optional<std::int64_t> lattice_offset(const PlanarPoint& p, const PlanarPoint& origin, Vec2 center,
                                           const GoalSet& goal, double tol, int max_offset);

}  // namespace achieve
