#include <gtest/gtest.h>

#include "achieve/errors.hpp"
#include "achieve/simulate.hpp"

using namespace achieve;

TEST(Adversary, NamesRoundTrip) {
  for (auto k : {AdversaryKind::Random, AdversaryKind::ThreatGreedy, AdversaryKind::CircleSquatter,
                 AdversaryKind::ForcingMimic}) {
    EXPECT_EQ(adversary_from_string(to_string(k)), k);
  }
  EXPECT_THROW(adversary_from_string("greedy"), DomainError);
}

TEST(Adversary, Deterministic) {
  const GoalSet g;
  const std::vector<PlanarPoint> p1{PlanarPoint::free({0.0, 0.0})};
  const std::vector<PlanarPoint> p2{PlanarPoint::free({40.0, 0.0})};
  EXPECT_EQ(adversary_move(AdversaryKind::Random, p1, p2, g, 7), adversary_move(AdversaryKind::Random, p1, p2, g, 7));
}

TEST(Adversary, CompletesItsOwnThreat) {
  const GoalSet g;
  std::vector<PlanarPoint> p1;
  for (std::size_t k = 0; k < 4; ++k) p1.push_back(PlanarPoint::free(g.point(k, {5.0, 5.0}, 0.4, -1)));
  const std::vector<PlanarPoint> p2{PlanarPoint::free({40.0, 0.0}), PlanarPoint::free({41.0, 0.0}),
                                    PlanarPoint::free({42.0, 0.0}), PlanarPoint::free({43.0, 0.0})};
  const auto m = adversary_move(AdversaryKind::CircleSquatter, p1, p2, g, 1);
  EXPECT_NEAR(distance(m.xy(), g.point(4, {5.0, 5.0}, 0.4, -1)), 0.0, 1e-9);
}

TEST(Simulate, SameSeedSameGame) {
  const auto a = simulate(AdversaryKind::ThreatGreedy, 60, 3);
  const auto b = simulate(AdversaryKind::ThreatGreedy, 60, 3);
  ASSERT_EQ(a.transcript.size(), b.transcript.size());
  for (std::size_t i = 0; i < a.transcript.size(); ++i) EXPECT_EQ(a.transcript[i].point, b.transcript[i].point);
}

TEST(Simulate, ShortGamesAreDraws) {
  for (auto k : {AdversaryKind::Random, AdversaryKind::ThreatGreedy, AdversaryKind::CircleSquatter,
                 AdversaryKind::ForcingMimic}) {
    const auto r = simulate(k, 80, 11);
    EXPECT_FALSE(r.verdict.p1_completed) << to_string(k);
    EXPECT_EQ(r.verdict.threats_unblocked, 0) << to_string(k);
    EXPECT_TRUE(r.verdict.violations.empty()) << to_string(k);
    EXPECT_EQ(r.verdict.moves, static_cast<int>(r.transcript.size()));
  }
}

TEST(Simulate, AlternatesPlayers) {
  const auto r = simulate(AdversaryKind::Random, 40, 2);
  for (std::size_t i = 0; i < r.transcript.size(); ++i) {
    EXPECT_EQ(r.transcript[i].i, static_cast<int>(i));
    EXPECT_EQ(r.transcript[i].player, i % 2 == 0 ? Player::One : Player::Two);
  }
}

TEST(Game, RejectsTakenPoints) {
  Game game;
  const auto reply = game.play(PlanarPoint::free({0.0, 0.0}));
  ASSERT_TRUE(reply.has_value());
  EXPECT_THROW(game.play(PlanarPoint::free({0.0, 0.0})), IllegalMoveError);
  EXPECT_THROW(game.play(*reply), IllegalMoveError);
}

TEST(Game, SnapsClicksOntoTheActiveCircle) {
  Game game;
  game.play(PlanarPoint::free({-500.0, 300.0}));
  game.play(PlanarPoint::free({-540.0, 300.0}));
  const auto& pr = game.bot().state().progression;
  ASSERT_TRUE(pr.has_value());
  const Vec2 click = pr->center + unit_at(0.7) * (1.0 + 5e-7);
  const PlanarPoint s = game.snap(click);
  ASSERT_TRUE(s.on.has_value());
  EXPECT_FALSE(s.on->exact);
  EXPECT_NEAR(distance(s.xy(), pr->center), 1.0, 1e-12);
  const PlanarPoint far = game.snap(pr->center + unit_at(0.7) * 1.1);
  EXPECT_FALSE(far.on.has_value());
}
