#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "achieve/adversary.hpp"
#include "achieve/drawing_bot.hpp"

namespace achieve {

struct PlayedPoint {
  int i = 0;
  Player player = Player::One;
  PlanarPoint point;
  std::string phase;  // bot phase after the move; empty for P1
};

struct Verdict {
  bool p1_completed = false;
  bool p2_completed = false;
  // Positions after a bot move in which P1 still held an unblocked threat.
  int threats_unblocked = 0;
  int moves = 0;
  std::vector<std::string> violations;
};

/// One plane game: P1 moves are supplied, the bot answers.
class Game {
 public:
  explicit Game(BotConfig config = {});

  // Plays P1's point and returns the bot's reply, or nullopt when the move
  // ended the game. Throws IllegalMoveError if the point is taken (within the
  // snap tolerance) or the game is over.
  std::optional<PlanarPoint> play(const PlanarPoint& p1_move);

  // Snaps a human click within the snap tolerance of the bot's active circle
  // onto it, flagged inexact.
  PlanarPoint snap(Vec2 click) const;

  const std::vector<PlanarPoint>& p1() const { return p1_; }
  const std::vector<PlanarPoint>& p2() const { return p2_; }
  const std::vector<PlayedPoint>& transcript() const { return transcript_; }
  const DrawingBot& bot() const { return bot_; }
  const Verdict& verdict() const { return verdict_; }
  std::optional<Player> winner() const;
  bool over() const { return verdict_.p1_completed || verdict_.p2_completed; }

 private:
  DrawingBot bot_;
  std::vector<PlanarPoint> p1_;
  std::vector<PlanarPoint> p2_;
  std::vector<PlayedPoint> transcript_;
  Verdict verdict_;
};

struct SimulationResult {
  std::vector<PlayedPoint> transcript;
  Verdict verdict;
  std::vector<std::string> notes;
};

/// Plays the adversary against the bot until someone completes a copy or
/// max_moves points (both players) have been placed.
SimulationResult simulate(AdversaryKind kind, int max_moves, std::uint64_t seed, const BotConfig& config = {});

}  // namespace achieve
