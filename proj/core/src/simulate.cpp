#include "achieve/simulate.hpp"

#include <cmath>
#include <numbers>

#include "achieve/errors.hpp"

namespace achieve {

Game::Game(BotConfig config) : bot_(std::move(config)) {}

std::optional<Player> Game::winner() const {
  if (verdict_.p1_completed) return Player::One;
  if (verdict_.p2_completed) return Player::Two;
  return std::nullopt;
}

PlanarPoint Game::snap(Vec2 click) const {
  const auto& pr = bot_.state().progression;
  if (!pr) return PlanarPoint::free(click);
  const Vec2 d = click - pr->center;
  const double r = d.norm();
  if (r == 0.0 || std::abs(r - 1.0) > bot_.config().snap) return PlanarPoint::free(click);
  const double angle = std::atan2(d.y, d.x);
  // Rational approximation of angle / pi with denominator 10^6.
  constexpr std::int64_t kDen = 1000000;
  const auto num = static_cast<std::int64_t>(std::llround(angle / std::numbers::pi * kDen));
  PlanarPoint p = PlanarPoint::free(pr->center + unit_at(angle));
  p.on = OnCircle{pr->circle_id, pr->center, ExactAngle(Rational(num, kDen), 0), false};
  return p;
}

std::optional<PlanarPoint> Game::play(const PlanarPoint& p1_move) {
  if (over()) throw IllegalMoveError("game is over");
  const BotConfig& cfg = bot_.config();
  const double tol = std::max(cfg.eps, cfg.snap);
  if (occupied(p1_, p1_move.xy(), tol) || occupied(p2_, p1_move.xy(), tol)) {
    throw IllegalMoveError("point is already taken");
  }
  p1_.push_back(p1_move);
  transcript_.push_back({verdict_.moves++, Player::One, p1_move, {}});
  if (!find_copies(p1_, cfg.goal, cfg.eps).empty()) {
    verdict_.p1_completed = true;
    return std::nullopt;
  }
  PlanarPoint reply = bot_.move(p1_, p2_);
  p2_.push_back(reply);
  transcript_.push_back({verdict_.moves++, Player::Two, reply, phase_name(bot_.state().phase)});
  verdict_.violations = bot_.state().violations;
  if (bot_.state().won || !find_copies(p2_, cfg.goal, cfg.eps).empty()) {
    verdict_.p2_completed = true;
    return reply;
  }
  if (!find_threats(p1_, p2_, cfg.goal, cfg.eps, Player::One).empty()) ++verdict_.threats_unblocked;
  return reply;
}

SimulationResult simulate(AdversaryKind kind, int max_moves, std::uint64_t seed, const BotConfig& config) {
  Game game(config);
  while (!game.over() && game.verdict().moves < max_moves) {
    game.play(adversary_move(kind, game.p1(), game.p2(), config.goal, seed));
  }
  return {game.transcript(), game.verdict(), game.bot().state().notes};
}

}  // namespace achieve
