#pragma once

#include <array>
#include <set>
#include <vector>

#include "achieve/geometry.hpp"

namespace oracle {

using MemberSet = std::array<int, 5>;  // sorted point indices

// Every 5-subset whose points, under some labelling, reproduce the goal set's
// pairwise distances within tol.
std::set<MemberSet> naive_copies(const std::vector<achieve::Vec2>& pts, const achieve::GoalSet& goal, double tol);

}  // namespace oracle
