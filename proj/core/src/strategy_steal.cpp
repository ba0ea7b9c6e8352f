#include "achieve/strategy_steal.hpp"

#include "achieve/solver.hpp"

namespace achieve {

namespace {

std::optional<VertexId> lowest_free(const Occupancy& pos) {
  for (VertexId v = 0; v < pos.vertex_count(); ++v) {
    if (pos.is_free(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

VertexId StolenStrategy::operator()(const Occupancy& pos) {
  if (pos.mover() != Player::One) throw DomainError("stolen strategy called when Player 1 is not to move");
  if (ghost_ && !pos.owns(Player::One, *ghost_)) throw StateError("ghost vertex is not held by Player 1");
  auto fresh = lowest_free(pos);
  if (!fresh) throw IllegalMoveError("no free vertex");
  if (!ghost_) {
    ghost_ = *fresh;
    return *fresh;
  }
  // Erase the ghost and swap roles: the opponent is the first player there.
  Occupancy imagined(pos.vertex_count());
  for (VertexId v = 0; v < pos.vertex_count(); ++v) {
    if (v == *ghost_) continue;
    if (pos.owns(Player::One, v)) imagined.assign(v, Player::Two);
    if (pos.owns(Player::Two, v)) imagined.assign(v, Player::One);
  }
  const VertexId reply = sigma_(imagined, Player::Two);
  if (reply == *ghost_) {
    ghost_ = *fresh;
    return *fresh;
  }
  if (reply >= pos.vertex_count() || !pos.is_free(reply)) {
    throw IllegalMoveError("sigma returned an occupied vertex");
  }
  return reply;
}

StolenStrategy steal(Strategy sigma) { return StolenStrategy(std::move(sigma)); }

Hypergraph restrict_hypergraph(const Hypergraph& h, VertexId x) {
  if (x >= h.vertex_count()) throw DomainError("restrict: unknown vertex");
  std::vector<std::string> names;
  std::vector<VertexId> remap(h.vertex_count(), 0);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (v == x) continue;
    remap[v] = names.size();
    names.push_back(h.name(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge shrunk;
    for (VertexId v : e) {
      if (v != x) shrunk.push_back(remap[v]);
    }
    edges.push_back(std::move(shrunk));
  }
  return Hypergraph::from_indices(std::move(names), std::move(edges), true);
}

bool verify_no_p2_strong(const Hypergraph& h) { return !solve_second_player_strong(h); }

HumiliationCheck check_no_humiliating(const Hypergraph& h) {
  HumiliationCheck check;
  check.humiliating_forced = solve(h, WinCriterion::Humiliating);
  check.singleton_carve_out = h.has_singleton_edge();
  check.reduction_holds = true;
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    if (solve_second_player_strong(restrict_hypergraph(h, x))) {
      check.reduction_holds = false;
      break;
    }
  }
  return check;
}

bool verify_no_humiliating(const Hypergraph& h) { return check_no_humiliating(h).passed(); }

}  // namespace achieve
