#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "achieve/congruence.hpp"
#include "naive_congruence.hpp"
#include "point_sets.hpp"

using namespace achieve;

namespace {

std::vector<PlanarPoint> as_points(const std::vector<Vec2>& v) {
  std::vector<PlanarPoint> out;
  for (Vec2 p : v) out.push_back(PlanarPoint::free(p));
  return out;
}

std::set<oracle::MemberSet> member_sets(const std::vector<CopyOfG>& copies) {
  std::set<oracle::MemberSet> out;
  for (const auto& c : copies) {
    oracle::MemberSet m = c.member;
    std::sort(m.begin(), m.end());
    out.insert(m);
  }
  return out;
}

std::vector<PlanarPoint> copy_at(const GoalSet& g, Vec2 c, double base, int orientation) {
  std::vector<PlanarPoint> out;
  for (std::size_t k = 0; k < 5; ++k) out.push_back(PlanarPoint::free(g.point(k, c, base, orientation)));
  return out;
}

}  // namespace

TEST(FindCopies, FindsAPlantedCopyWithItsPose) {
  const GoalSet g;
  const auto pts = copy_at(g, {0.5, -2.0}, 1.1, -1);
  const auto copies = find_copies(pts, g, kEpsInternal);
  ASSERT_EQ(copies.size(), 1u);
  EXPECT_NEAR(distance(copies[0].center, {0.5, -2.0}), 0.0, 1e-12);
  EXPECT_EQ(copies[0].orientation, -1);
  EXPECT_LE(copies[0].residual, kEpsInternal);
  EXPECT_EQ(copies[0].present(), 5);
}

TEST(FindCopies, RejectsNearMisses) {
  const GoalSet g;
  auto pts = copy_at(g, {0.0, 0.0}, 0.0, 1);
  pts[4].x += 1e-7;
  EXPECT_TRUE(find_copies(pts, g, kEpsInternal).empty());
  EXPECT_EQ(find_copies(pts, g, 1e-6).size(), 1u);
}

TEST(FindCopies, ChainSharesPoints) {
  const GoalSet g;
  std::vector<PlanarPoint> pts;
  for (int k : {0, 2, 3, 4, 5, 6, 8}) pts.push_back(PlanarPoint::free(unit_at(k * g.half_step())));
  EXPECT_EQ(find_copies(pts, g, kEpsInternal).size(), 2u);
}

TEST(FindCopies, MatchesNaiveScan) {
  const GoalSet g;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto pts = support::planted_point_set(seed, g, 10);
    EXPECT_EQ(member_sets(find_copies(as_points(pts), g, kEpsInternal)), oracle::naive_copies(pts, g, 1e-8))
        << "seed " << seed;
  }
}

TEST(Threats, FourPointsWithAFreeFifth) {
  const GoalSet g;
  auto pts = copy_at(g, {0.0, 0.0}, 0.0, 1);
  const Vec2 middle = pts[4].xy();
  pts.pop_back();
  auto threats = find_threats(pts, {}, g, kEpsInternal);
  ASSERT_EQ(threats.size(), 1u);
  EXPECT_EQ(threats[0].missing, 4u);
  EXPECT_NEAR(distance(threats[0].missing_point(), middle), 0.0, 1e-12);
  // Taken by the opponent: no threat.
  const std::vector<PlanarPoint> other{PlanarPoint::free(middle)};
  EXPECT_TRUE(find_threats(pts, other, g, kEpsInternal).empty());
}

TEST(OpenTriples, NeedTwoFreeGaps) {
  const GoalSet g;
  const auto full = copy_at(g, {0.0, 0.0}, 0.0, 1);
  const std::vector<PlanarPoint> three(full.begin(), full.begin() + 3);
  EXPECT_FALSE(open_triples(three, {}, g, kEpsInternal).empty());
  // g1, g2, g3 also sit in the copy shifted back by theta; blocking g4 only
  // removes the original one.
  const std::vector<PlanarPoint> block{full[3]};
  const auto left = open_triples(three, block, g, kEpsInternal);
  EXPECT_EQ(left.size(), open_triples(three, {}, g, kEpsInternal).size() - 1);
  for (const auto& c : left) {
    for (const Vec2& p : c.points) EXPECT_GT(distance(p, full[3].xy()), 1e-6);
  }
}

TEST(ForkPoints, TwoThreatsFromOnePoint) {
  const GoalSet g;
  // Half steps {0,1,2,3,4} with 6 and -2 taken by the opponent: playing 5 threatens -1 and 7.
  std::vector<PlanarPoint> mine;
  for (int k : {0, 1, 2, 3, 4}) mine.push_back(PlanarPoint::free(unit_at(k * g.half_step())));
  std::vector<PlanarPoint> theirs;
  for (int k : {6, -2}) theirs.push_back(PlanarPoint::free(unit_at(k * g.half_step())));
  const auto forks = fork_points(mine, theirs, g, kEpsInternal);
  const Vec2 five = unit_at(5 * g.half_step());
  EXPECT_TRUE(std::any_of(forks.begin(), forks.end(), [&](Vec2 f) { return distance(f, five) < 1e-9; }));
}

TEST(PointIndex, NearestWithin) {
  const std::vector<Vec2> pts{{0.0, 0.0}, {1.0, 1.0}, {1.0, 1.0 + 1e-3}};
  const PointIndex idx(pts);
  EXPECT_EQ(idx.nearest_within({1.0, 1.0 + 9e-4}, 1e-3), std::optional<std::size_t>(2));
  EXPECT_FALSE(idx.nearest_within({5.0, 5.0}, 1.0).has_value());
  EXPECT_EQ(idx.within({0.5, 0.5}, 0.8).size(), 3u);
}
