#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "achieve/errors.hpp"
#include "achieve/hypergraph.hpp"

using namespace achieve;

namespace {

std::set<std::set<std::string>> named_edges(const Hypergraph& h) {
  std::set<std::set<std::string>> out;
  for (const auto& e : h.edges()) {
    std::set<std::string> names;
    for (VertexId v : e) names.insert(h.name(v));
    out.insert(names);
  }
  return out;
}

}  // namespace

TEST(Hypergraph, BuildsFromNames) {
  Hypergraph h({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(h.vertex_count(), 3u);
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.index_of("c"), 2u);
  EXPECT_FALSE(h.find("z").has_value());
  EXPECT_FALSE(h.has_singleton_edge());
}

TEST(Hypergraph, RejectsUnknownVertexAndDuplicateNames) {
  EXPECT_THROW(Hypergraph({"a"}, {{"a", "q"}}), DomainError);
  EXPECT_THROW(Hypergraph({"a", "a"}, {{"a"}}), DomainError);
  EXPECT_THROW(Hypergraph({"a", "b"}, {{}}), DomainError);
}

TEST(Hypergraph, DropsDuplicateEdges) {
  Hypergraph h({"a", "b", "c"}, {{"a", "b"}, {"b", "a"}, {"c"}});
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.duplicates_dropped(), 1u);
  EXPECT_TRUE(h.has_singleton_edge());
}

TEST(Hypergraph, EdgeMasksRespectCapacity) {
  std::vector<std::string> names;
  for (int i = 0; i < 65; ++i) names.push_back("v" + std::to_string(i));
  Hypergraph big(names, {{"v0", "v64"}});
  EXPECT_FALSE(big.fits_solver());
  EXPECT_THROW(big.edge_masks(), CapacityError);

  Hypergraph h({"a", "b", "c"}, {{"a", "c"}});
  ASSERT_EQ(h.edge_masks().size(), 1u);
  EXPECT_EQ(h.edge_masks()[0], 0b101u);
}

TEST(Hypergraph, HtHasRootToLeafPaths) {
  const Hypergraph h = build_ht(2);
  EXPECT_EQ(h.vertex_count(), 7u);
  const std::set<std::set<std::string>> expected{
      {"r", "r0", "r00"}, {"r", "r0", "r01"}, {"r", "r1", "r10"}, {"r", "r1", "r11"}};
  EXPECT_EQ(named_edges(h), expected);
  EXPECT_THROW(build_ht(0), DomainError);
}

TEST(Hypergraph, FnHasBothEdgeTypes) {
  const Hypergraph h = build_fn(3);
  EXPECT_EQ(h.vertex_count(), 6u);
  // 2^(n-1) type 1 edges through (1,0) plus n columns.
  EXPECT_EQ(h.edge_count(), 4u + 3u);
  const auto edges = named_edges(h);
  EXPECT_TRUE(edges.count({"(1,0)", "(2,1)", "(3,0)"}));
  EXPECT_TRUE(edges.count({"(2,0)", "(2,1)"}));
  EXPECT_FALSE(edges.count({"(1,1)", "(2,1)", "(3,0)"}));
}

TEST(Hypergraph, CliqueGameCountsTriangles) {
  const Hypergraph h = build_clique_game(4, 3);
  EXPECT_EQ(h.vertex_count(), 6u);
  EXPECT_EQ(h.edge_count(), 4u);
  for (const auto& e : h.edges()) EXPECT_EQ(e.size(), 3u);
}

TEST(Transcript, ValidatesMoves) {
  const Hypergraph h({"a", "b", "c"}, {{"a", "b"}});
  Transcript t = apply_move({}, h, "a");
  EXPECT_EQ(t.next_player(), Player::Two);
  EXPECT_THROW(apply_move(t, h, "a"), IllegalMoveError);
  EXPECT_THROW(apply_move(t, h, "zzz"), DomainError);
  t = apply_move(t, h, "b");
  t = apply_move(t, h, "c");
  EXPECT_THROW(apply_move(t, h, VertexId{0}), IllegalMoveError);
}

TEST(Occupancy, TracksOwnersAndEdges) {
  const Hypergraph h({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}, {"a", "c", "d"}});
  const std::vector<VertexId> seq{0, 2, 1, 3};
  const Occupancy occ = Occupancy::from(Transcript::from_vertices(h, seq), h.vertex_count());
  EXPECT_EQ(occ.count(Player::One), 2u);
  EXPECT_EQ(occ.free_count(), 0u);
  EXPECT_EQ(completed_edges(occ, h, Player::One), std::vector<std::size_t>{0});
  EXPECT_EQ(completed_edges(occ, h, Player::Two), std::vector<std::size_t>{1});
  // P2 holds c, d of {a, c, d}; a belongs to P1, so the near miss is blocked.
  EXPECT_EQ(near_miss_edges(occ, h, Player::Two, false), std::vector<std::size_t>{2});
  EXPECT_TRUE(near_miss_edges(occ, h, Player::Two, true).empty());
}

TEST(RandomHypergraph, IsDeterministicAndWithinBounds) {
  RandomHypergraphOptions opt;
  opt.max_vertices = 7;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Hypergraph a = random_hypergraph(seed, opt);
    EXPECT_EQ(a, random_hypergraph(seed, opt));
    EXPECT_LE(a.vertex_count(), 7u);
    EXPECT_GE(a.edge_count(), 1u);
    for (const auto& e : a.edges()) {
      EXPECT_GE(e.size(), 1u);
      EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    }
  }
}
