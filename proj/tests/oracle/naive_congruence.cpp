#include "naive_congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oracle {

std::set<MemberSet> naive_copies(const std::vector<achieve::Vec2>& pts, const achieve::GoalSet& goal, double tol) {
  // Template distances from the canonical points on the unit circle at the origin.
  std::array<achieve::Vec2, 5> g{};
  for (std::size_t k = 0; k < 5; ++k) g[k] = goal.point(k, {0.0, 0.0}, 0.0, 1);
  std::set<MemberSet> out;
  const int n = static_cast<int>(pts.size());
  MemberSet idx{};
  for (idx[0] = 0; idx[0] < n; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
          for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4]) {
            std::array<int, 5> perm{0, 1, 2, 3, 4};
            do {
              bool ok = true;
              for (int a = 0; a < 5 && ok; ++a) {
                for (int b = a + 1; b < 5 && ok; ++b) {
                  const double d = achieve::distance(pts[idx[perm[a]]], pts[idx[perm[b]]]);
                  ok = std::abs(d - achieve::distance(g[a], g[b])) <= tol;
                }
              }
              if (ok) {
                out.insert(idx);
                break;
              }
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
  return out;
}

}  // namespace oracle
