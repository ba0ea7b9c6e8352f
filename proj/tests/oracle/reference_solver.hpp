#pragma once

#include <vector>

#include "achieve/hypergraph.hpp"
#include "achieve/solver.hpp"

namespace oracle {

// Win predicate evaluated from scratch on a complete sequence of vertices
// (P1 takes even positions).
bool full_play_outcome(const achieve::Hypergraph& h, const std::vector<achieve::VertexId>& seq,
                       achieve::WinCriterion c);

// Plain minimax over every complete play. No memo, no pruning.
bool reference_solve(const achieve::Hypergraph& h, achieve::WinCriterion c);

// Same, for the second player forcing "P2 completes first".
bool reference_p2_strong(const achieve::Hypergraph& h);

}  // namespace oracle
