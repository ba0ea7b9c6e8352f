#include <gtest/gtest.h>

#include "achieve/solver.hpp"
#include "achieve/strategy_steal.hpp"
#include "reference_solver.hpp"

using namespace achieve;

namespace {

VertexId lowest_free(const Occupancy& o) {
  for (VertexId v = 0; v < o.vertex_count(); ++v) {
    if (o.is_free(v)) return v;
  }
  return 0;
}

}  // namespace

TEST(Restrict, RemovesVertexAndKeepsEmptiedEdges) {
  const Hypergraph h({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"b", "c"}});
  const Hypergraph r = restrict_hypergraph(h, h.index_of("a"));
  EXPECT_EQ(r.vertex_count(), 2u);
  EXPECT_FALSE(r.find("a").has_value());
  ASSERT_EQ(r.edge_count(), 3u);
  std::size_t empty = 0;
  for (const auto& e : r.edges()) empty += e.empty() ? 1 : 0;
  EXPECT_EQ(empty, 1u);
}

TEST(Restrict, MergesEdgesThatCoincide) {
  const Hypergraph h({"a", "b", "c"}, {{"a", "b"}, {"b"}});
  const Hypergraph r = restrict_hypergraph(h, h.index_of("a"));
  EXPECT_EQ(r.edge_count(), 1u);
}

TEST(StolenStrategy, FirstMoveIsTheGhost) {
  StolenStrategy s([](const Occupancy& o, Player) { return lowest_free(o); });
  Occupancy pos(4);
  EXPECT_EQ(s(pos), 0u);
  EXPECT_EQ(s.ghost(), std::optional<VertexId>(0));
}

TEST(StolenStrategy, SigmaSeesTheGhostErasedWithRolesSwapped) {
  Occupancy seen;
  Player seen_mover = Player::One;
  StolenStrategy s([&](const Occupancy& o, Player mover) {
    seen = o;
    seen_mover = mover;
    for (VertexId v = o.vertex_count(); v-- > 0;) {
      if (o.is_free(v)) return v;
    }
    return VertexId{0};
  });
  Occupancy pos(5);
  pos.assign(s(pos), Player::One);  // ghost 0
  pos.assign(2, Player::Two);
  const VertexId reply = s(pos);
  EXPECT_TRUE(seen.is_free(0));
  EXPECT_TRUE(seen.owns(Player::One, 2));
  EXPECT_EQ(seen_mover, Player::Two);
  EXPECT_EQ(reply, 4u);
}

TEST(StolenStrategy, GhostAnswerPicksANewGhost) {
  StolenStrategy s([](const Occupancy& o, Player) { return lowest_free(o); });
  Occupancy pos(4);
  pos.assign(s(pos), Player::One);  // ghost 0
  pos.assign(1, Player::Two);
  // With 0 erased, sigma answers 0 (the ghost): play lowest free (2), it becomes the ghost.
  EXPECT_EQ(s(pos), 2u);
  EXPECT_EQ(s.ghost(), std::optional<VertexId>(2));
}

TEST(Verify, NoSecondPlayerStrongWinOnFixtures) {
  for (const auto& h : {build_ht(2), build_fn(2), build_fn(3), build_clique_game(4, 3)}) {
    EXPECT_TRUE(verify_no_p2_strong(h));
    EXPECT_TRUE(verify_no_humiliating(h));
  }
}

TEST(Verify, SingletonEdgeIsTheCarveOut) {
  const Hypergraph h({"a", "b"}, {{"a"}, {"a", "b"}});
  const HumiliationCheck c = check_no_humiliating(h);
  EXPECT_TRUE(c.humiliating_forced);
  EXPECT_TRUE(c.singleton_carve_out);
  EXPECT_TRUE(c.passed());
}

TEST(Verify, AgreesWithReferenceSearch) {
  RandomHypergraphOptions opt;
  opt.max_vertices = 6;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Hypergraph h = random_hypergraph(seed, opt);
    EXPECT_EQ(verify_no_p2_strong(h), !oracle::reference_p2_strong(h)) << seed;
    EXPECT_EQ(check_no_humiliating(h).humiliating_forced, oracle::reference_solve(h, WinCriterion::Humiliating));
  }
}
