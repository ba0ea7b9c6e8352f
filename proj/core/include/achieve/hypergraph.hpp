#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "achieve/errors.hpp"

namespace achieve {

enum class Player : std::uint8_t { One = 1, Two = 2 };

constexpr Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }

using VertexId = std::size_t;
using VertexMask = std::uint64_t;
using Edge = std::vector<VertexId>;

// Largest board the exhaustive solver accepts: positions are two 64-bit masks.
inline constexpr std::size_t kSolverVertexCap = 64;

/// Finite hypergraph: the board of an achievement game.
///
/// Vertex names are opaque strings; internally vertices are dense indices in
/// declaration order and every edge is a sorted vector of indices. Edges are
/// deduplicated on construction. The data model itself has no size limit;
/// only `edge_masks()` (and therefore the solver) requires at most
/// kSolverVertexCap vertices.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws DomainError on unknown vertices, duplicate vertex names or empty edges.
  Hypergraph(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& edges);

  // Empty edges are only admitted when `allow_empty_edges` is set; they arise
  // from `restrict_hypergraph` and count as complete for whoever moves.
  static Hypergraph from_indices(std::vector<std::string> vertices, std::vector<Edge> edges,
                                 bool allow_empty_edges = false);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId index_of(std::string_view name) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  // Number of input edges dropped as set-duplicates of an earlier edge.
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  bool fits_solver() const { return vertex_count() <= kSolverVertexCap; }
  bool has_singleton_edge() const;

  // One bitmask per edge. Throws CapacityError above kSolverVertexCap.
  std::vector<VertexMask> edge_masks() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void normalize(bool allow_empty_edges);

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> lookup_;
  std::size_t duplicates_dropped_ = 0;
};

struct Move {
  Player player;
  VertexId vertex;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Alternating move history, P1 first, no repeated vertex.
class Transcript {
 public:
  Transcript() = default;

  std::span<const Move> moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  Player next_player() const { return moves_.size() % 2 == 0 ? Player::One : Player::Two; }
  const Move& operator[](std::size_t i) const { return moves_.at(i); }

  // Builds a transcript from a vertex sequence, validating every move.
  static Transcript from_vertices(const Hypergraph& h, std::span<const VertexId> vertices);

  friend bool operator==(const Transcript&, const Transcript&) = default;

 private:
  friend Transcript apply_move(const Transcript&, const Hypergraph&, VertexId);
  std::vector<Move> moves_;
};

// Throws IllegalMoveError on an occupied vertex or a full board, DomainError on
// an unknown vertex.
Transcript apply_move(const Transcript& transcript, const Hypergraph& h, VertexId vertex);
Transcript apply_move(const Transcript& transcript, const Hypergraph& h, std::string_view vertex);

/// Who owns each vertex.
class Occupancy {
 public:
  enum class Owner : std::uint8_t { None = 0, One = 1, Two = 2 };

  Occupancy() = default;
  explicit Occupancy(std::size_t vertex_count) : owner_(vertex_count, Owner::None) {}

  static Occupancy from(const Transcript& transcript, std::size_t vertex_count);

  std::size_t vertex_count() const { return owner_.size(); }
  Owner owner(VertexId v) const { return owner_.at(v); }
  bool is_free(VertexId v) const { return owner_.at(v) == Owner::None; }
  bool owns(Player p, VertexId v) const { return owner_.at(v) == to_owner(p); }
  std::size_t count(Player p) const;
  std::size_t free_count() const;
  std::vector<VertexId> vertices(Player p) const;

  // Player whose turn it is, assuming P1 moved first.
  Player mover() const { return count(Player::One) == count(Player::Two) ? Player::One : Player::Two; }

  void assign(VertexId v, Player p) { owner_.at(v) = to_owner(p); }
  void erase(VertexId v) { owner_.at(v) = Owner::None; }

  static constexpr Owner to_owner(Player p) { return p == Player::One ? Owner::One : Owner::Two; }

  friend bool operator==(const Occupancy&, const Occupancy&) = default;

 private:
  std::vector<Owner> owner_;
};

// Indices of edges fully owned by `player`.
std::vector<std::size_t> completed_edges(const Occupancy& occ, const Hypergraph& h, Player player);

// Indices of edges on which `player` owns exactly |e| - 1 vertices. With
// `unblocked_only` the opponent must own none of the edge.
std::vector<std::size_t> near_miss_edges(const Occupancy& occ, const Hypergraph& h, Player player,
                                         bool unblocked_only);

// Balanced binary directed tree of the given depth; edges are root-to-leaf paths.
Hypergraph build_ht(int depth);

// Vertex set [n] x {0,1}. Type 1 edges pick one vertex per column and contain
// (1,0); Type 2 edges are the columns.
Hypergraph build_fn(int n);

// Vertices are the edges of K_board_n; hyperedges are the edge sets of goal_k-cliques.
Hypergraph build_clique_game(int board_n, int goal_k);

struct RandomHypergraphOptions {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 8;
  std::size_t min_edges = 1;
  std::size_t max_edges = 6;
  std::size_t min_edge_size = 1;
  std::size_t max_edge_size = 4;
  // Probability that an edge is forced to size 1 regardless of min_edge_size.
  double singleton_probability = 0.0;
};

// Deterministic for a given (seed, options) pair.
Hypergraph random_hypergraph(std::uint64_t seed, const RandomHypergraphOptions& options);

}  // namespace achieve
