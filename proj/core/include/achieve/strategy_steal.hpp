#pragma once

#include <functional>
#include <optional>

#include "achieve/hypergraph.hpp"

namespace achieve {

// Maps a position and the side to move to a free vertex.
using Strategy = std::function<VertexId(const Occupancy&, Player mover)>;

/// First-player strategy obtained from a second-player strategy by the
/// ghost-move construction.
///
/// The first move is the lowest-index vertex and becomes the ghost. Afterwards
/// sigma is consulted on the position with the ghost erased and the roles
/// swapped (our opponent plays first there). If sigma answers with the ghost
/// itself, the lowest free vertex is played and becomes the new ghost.
/// Stateful: one instance follows one game.
class StolenStrategy {
 public:
  explicit StolenStrategy(Strategy sigma) : sigma_(std::move(sigma)) {}

  // `pos` is the real position with Player::One to move.
  VertexId operator()(const Occupancy& pos);

  std::optional<VertexId> ghost() const { return ghost_; }

 private:
  Strategy sigma_;
  std::optional<VertexId> ghost_;
};

StolenStrategy steal(Strategy sigma);

// Removes x from the vertex set and from every edge. Edges that become empty
// are kept; they are complete for whichever player moves first.
Hypergraph restrict_hypergraph(const Hypergraph& h, VertexId x);

// The second player cannot force a strong win on `h`.
bool verify_no_p2_strong(const Hypergraph& h);

struct HumiliationCheck {
  bool humiliating_forced = false;   // raw solver answer
  bool singleton_carve_out = false;  // h has an edge of size 1
  bool reduction_holds = false;      // for every first move x, no second-player strong win on h - x
  bool passed() const { return (!humiliating_forced || singleton_carve_out) && reduction_holds; }
};

HumiliationCheck check_no_humiliating(const Hypergraph& h);

// Player 2 can prevent a humiliating win (size-1 edges are the documented exception).
bool verify_no_humiliating(const Hypergraph& h);

}  // namespace achieve
