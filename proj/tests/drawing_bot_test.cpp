#include <gtest/gtest.h>

#include <cmath>

#include "achieve/drawing_bot.hpp"
#include "achieve/errors.hpp"
#include "achieve/simulate.hpp"

using namespace achieve;

namespace {

std::vector<PlanarPoint> copy_minus(const GoalSet& g, Vec2 c, std::size_t missing) {
  std::vector<PlanarPoint> out;
  for (std::size_t k = 0; k < 5; ++k) {
    if (k != missing) out.push_back(PlanarPoint::free(g.point(k, c, 0.2, 1)));
  }
  return out;
}

// Plays P1 points far apart from each other and from the bot.
PlanarPoint far_point(int i) { return PlanarPoint::free({-500.0 - 40.0 * i, 300.0}); }

}  // namespace

TEST(Progression, MiddleSitsHalfAStepInside) {
  Progression pr;
  pr.anchor = ExactAngle(Rational(1, 4), 0);
  pr.step = 2;
  pr.lo = 0;
  pr.hi = 2;
  pr.direction = 1;
  EXPECT_EQ(pr.next_index(), 3);
  EXPECT_EQ(pr.next_middle(), ExactAngle(Rational(1, 4), 3));
  pr.direction = -1;
  EXPECT_EQ(pr.next_index(), -1);
  EXPECT_EQ(pr.next_middle(), ExactAngle(Rational(1, 4), 1));
  pr.step = -2;
  pr.direction = 1;
  EXPECT_EQ(pr.next_middle(), ExactAngle(Rational(1, 4), -3));
}

TEST(LatticeOffset, ExactAndNumeric) {
  const GoalSet g;
  const Vec2 c{2.0, 1.0};
  const PlanarPoint o = PlanarPoint::on_circle(1, c, ExactAngle(Rational(1, 3), 4), g.t());
  const PlanarPoint p = PlanarPoint::on_circle(1, c, ExactAngle(Rational(1, 3), -7), g.t());
  EXPECT_EQ(lattice_offset(p, o, c, g, 1e-9, 100), std::optional<std::int64_t>(-11));
  EXPECT_EQ(lattice_offset(PlanarPoint::free(p.xy()), o, c, g, 1e-9, 100), std::optional<std::int64_t>(-11));
  const PlanarPoint off = PlanarPoint::free(c + unit_at(o.on->angle.radians(g.t()) + 0.3));
  EXPECT_FALSE(lattice_offset(off, o, c, g, 1e-9, 100).has_value());
}

TEST(Bot, LedgerMismatchThrows) {
  const BotConfig cfg;
  const std::vector<PlanarPoint> p1{far_point(0)};
  const std::vector<PlanarPoint> p2{PlanarPoint::free({1.0, 1.0})};
  EXPECT_THROW(bot_move(BotState{}, p1, p2, cfg), StateError);
  EXPECT_THROW(bot_move(BotState{}, {}, {}, cfg), StateError);
}

TEST(Bot, FirstMoveRetreatsFarAway) {
  const BotConfig cfg;
  const std::vector<PlanarPoint> p1{PlanarPoint::free({3.0, -4.0})};
  const auto [p, s] = bot_move(BotState{}, p1, {}, cfg);
  EXPECT_GE(distance(p.xy(), p1[0].xy()), 30.0);
  EXPECT_EQ(s.phase, Phase::Retreat);
  EXPECT_EQ(s.own_points, 1u);
}

TEST(Bot, IsAPureFunction) {
  const BotConfig cfg;
  const std::vector<PlanarPoint> p1{PlanarPoint::free({3.0, -4.0})};
  EXPECT_EQ(bot_move(BotState{}, p1, {}, cfg).first, bot_move(BotState{}, p1, {}, cfg).first);
}

TEST(Bot, BlocksAPlantedThreat) {
  const GoalSet g;
  const BotConfig cfg;
  for (std::size_t missing = 0; missing < 5; ++missing) {
    const auto four = copy_minus(g, {0.0, 0.0}, missing);
    const std::vector<PlanarPoint> p2{far_point(0), far_point(1), far_point(2)};
    BotState s;
    s.own_points = 3;
    const auto [reply, next] = bot_move(s, four, p2, cfg);
    EXPECT_NEAR(distance(reply.xy(), g.point(missing, {0.0, 0.0}, 0.2, 1)), 0.0, 1e-9) << missing;
    EXPECT_EQ(next.phase, Phase::BlockResponse);
    EXPECT_TRUE(next.last_blocked.has_value());
  }
}

TEST(Bot, NeverLetsAPlantedCopyBecomeAThreat) {
  const GoalSet g;
  Game game;
  for (const auto& p : copy_minus(g, {0.0, 0.0}, 4)) {
    try {
      game.play(p);
    } catch (const IllegalMoveError&) {
      break;  // the bot already sits on this point
    }
    EXPECT_TRUE(find_threats(game.p1(), game.p2(), g, kEpsInternal).empty());
  }
  EXPECT_FALSE(game.verdict().p1_completed);
}

TEST(Bot, BuildsOnOneCircleThenForces) {
  const GoalSet g;
  Game game;
  game.play(far_point(0));  // retreat
  game.play(far_point(1));  // h2
  game.play(far_point(2));  // h3
  const auto& p2 = game.p2();
  ASSERT_EQ(p2.size(), 3u);
  const auto& pr = game.bot().state().progression;
  ASSERT_TRUE(pr.has_value());
  for (const auto& p : p2) EXPECT_NEAR(distance(p.xy(), pr->center), 1.0, 1e-12);
  EXPECT_NEAR(angle_at(pr->center, p2[0].xy(), p2[1].xy()), g.theta(), 1e-12);
  EXPECT_NEAR(angle_at(pr->center, p2[1].xy(), p2[2].xy()), g.theta(), 1e-12);
  EXPECT_TRUE(p2[1].on && p2[1].on->exact);

  const auto h4 = game.play(far_point(3));
  ASSERT_TRUE(h4.has_value());
  EXPECT_EQ(game.bot().state().phase, Phase::Force);
  const auto bot_threats = find_threats(game.p2(), game.p1(), g, kEpsInternal, Player::Two);
  ASSERT_EQ(bot_threats.size(), 1u);
  EXPECT_EQ(bot_threats[0].missing, 4u);  // the middle point

  // P1 keeps blocking; each extension leaves exactly one new threat.
  for (int i = 0; i < 10; ++i) {
    const Vec2 m = find_threats(game.p2(), game.p1(), g, kEpsInternal, Player::Two).front().missing_point();
    ASSERT_TRUE(game.play(PlanarPoint::free(m)).has_value());
    const auto t = find_threats(game.p2(), game.p1(), g, kEpsInternal, Player::Two);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].missing, 4u);
  }
  EXPECT_TRUE(game.bot().state().violations.empty());
}

TEST(Bot, CashesInAnIgnoredThreat) {
  Game game;
  for (int i = 0; i < 4; ++i) game.play(far_point(i));
  ASSERT_EQ(game.bot().state().phase, Phase::Force);
  game.play(far_point(4));  // ignores the threat
  EXPECT_TRUE(game.verdict().p2_completed);
  EXPECT_EQ(game.winner(), std::optional<Player>(Player::Two));
  EXPECT_THROW(game.play(far_point(5)), IllegalMoveError);
}

TEST(Bot, SwitchesCircleWhenP1AnswersOnC) {
  const GoalSet g;
  Game game;
  game.play(far_point(0));
  game.play(far_point(1));  // bot places h2
  const auto pr = *game.bot().state().progression;
  const Vec2 h1 = game.p2()[0].xy();
  const Vec2 h2 = game.p2()[1].xy();
  // P1 takes the next lattice point on C.
  game.play(PlanarPoint::on_circle(pr.circle_id, pr.center, pr.angle_at(2), g.t()));
  const auto& now = *game.bot().state().progression;
  EXPECT_GT(distance(now.center, pr.center), 1e-3);
  EXPECT_NEAR(distance(now.center, h1), 1.0, 1e-12);
  EXPECT_NEAR(distance(now.center, h2), 1.0, 1e-12);
  const Vec2 h3 = game.p2()[2].xy();
  EXPECT_NEAR(distance(now.center, h3), 1.0, 1e-12);
  EXPECT_NEAR(angle_at(now.center, h2, h3), g.theta(), 1e-12);
  EXPECT_NEAR(angle_at(now.center, h1, h3), 2.0 * g.theta(), 1e-12);
}

TEST(Bot, PreemptsAThreatSequence) {
  // P1 owns {0, 2} on a far circle and gets a third lattice point while the bot
  // builds; the bot must not leave the {0,2,3} line standing.
  const GoalSet g;
  Game game;
  const Vec2 c{-200.0, -200.0};
  auto lat = [&](int k) { return PlanarPoint::free(c + unit_at(k * g.half_step())); };
  game.play(lat(0));
  game.play(lat(2));
  game.play(lat(3));
  EXPECT_FALSE(find_threat_win(game.p1(), game.p2(), g, kEpsInternal).has_value());
}
