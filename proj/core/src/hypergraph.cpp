#include "achieve/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <string>

namespace achieve {

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       const std::vector<std::vector<std::string>>& edges) {
  names_ = std::move(vertices);
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!lookup_.emplace(names_[v], v).second) {
      throw DomainError("duplicate vertex name '" + names_[v] + "'");
    }
  }
  for (const auto& named : edges) {
    Edge e;
    e.reserve(named.size());
    for (const auto& n : named) e.push_back(index_of(n));
    edges_.push_back(std::move(e));
  }
  normalize(false);
}

Hypergraph Hypergraph::from_indices(std::vector<std::string> vertices, std::vector<Edge> edges,
                                    bool allow_empty_edges) {
  Hypergraph h;
  h.names_ = std::move(vertices);
  for (VertexId v = 0; v < h.names_.size(); ++v) {
    if (!h.lookup_.emplace(h.names_[v], v).second) {
      throw DomainError("duplicate vertex name '" + h.names_[v] + "'");
    }
  }
  for (const auto& e : edges) {
    for (VertexId v : e) {
      if (v >= h.names_.size()) throw DomainError("edge references vertex index out of range");
    }
  }
  h.edges_ = std::move(edges);
  h.normalize(allow_empty_edges);
  return h;
}

void Hypergraph::normalize(bool allow_empty_edges) {
  std::set<Edge> seen;
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty() && !allow_empty_edges) throw DomainError("empty edge");
    if (seen.insert(e).second) {
      kept.push_back(std::move(e));
    } else {
      ++duplicates_dropped_;
    }
  }
  edges_ = std::move(kept);
}

std::optional<VertexId> Hypergraph::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VertexId Hypergraph::index_of(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw DomainError("unknown vertex '" + std::string(name) + "'");
}

bool Hypergraph::has_singleton_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.size() == 1; });
}

std::vector<VertexMask> Hypergraph::edge_masks() const {
  if (!fits_solver()) {
    throw CapacityError("hypergraph has " + std::to_string(vertex_count()) +
                        " vertices; the solver supports at most " + std::to_string(kSolverVertexCap));
  }
  std::vector<VertexMask> masks;
  masks.reserve(edges_.size());
  for (const auto& e : edges_) {
    VertexMask m = 0;
    for (VertexId v : e) m |= VertexMask{1} << v;
    masks.push_back(m);
  }
  return masks;
}

Transcript Transcript::from_vertices(const Hypergraph& h, std::span<const VertexId> vertices) {
  Transcript t;
  for (VertexId v : vertices) t = apply_move(t, h, v);
  return t;
}

Transcript apply_move(const Transcript& transcript, const Hypergraph& h, VertexId vertex) {
  if (vertex >= h.vertex_count()) {
    throw DomainError("unknown vertex index " + std::to_string(vertex));
  }
  for (const Move& m : transcript.moves()) {
    if (m.vertex == vertex) throw IllegalMoveError("vertex '" + h.name(vertex) + "' is already taken");
  }
  Transcript next = transcript;
  next.moves_.push_back(Move{transcript.next_player(), vertex});
  return next;
}

Transcript apply_move(const Transcript& transcript, const Hypergraph& h, std::string_view vertex) {
  return apply_move(transcript, h, h.index_of(vertex));
}

Occupancy Occupancy::from(const Transcript& transcript, std::size_t vertex_count) {
  Occupancy occ(vertex_count);
  for (const Move& m : transcript.moves()) occ.assign(m.vertex, m.player);
  return occ;
}

std::size_t Occupancy::count(Player p) const {
  return static_cast<std::size_t>(std::count(owner_.begin(), owner_.end(), to_owner(p)));
}

std::size_t Occupancy::free_count() const {
  return static_cast<std::size_t>(std::count(owner_.begin(), owner_.end(), Owner::None));
}

std::vector<VertexId> Occupancy::vertices(Player p) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < owner_.size(); ++v) {
    if (owner_[v] == to_owner(p)) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> completed_edges(const Occupancy& occ, const Hypergraph& h, Player player) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return occ.owns(player, v); })) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> near_miss_edges(const Occupancy& occ, const Hypergraph& h, Player player,
                                         bool unblocked_only) {
  std::vector<std::size_t> out;
  const Player other = opponent(player);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    if (e.empty()) continue;
    std::size_t mine = 0;
    std::size_t theirs = 0;
    for (VertexId v : e) {
      if (occ.owns(player, v)) ++mine;
      if (occ.owns(other, v)) ++theirs;
    }
    if (mine + 1 != e.size()) continue;
    if (unblocked_only && theirs != 0) continue;
    out.push_back(i);
  }
  return out;
}

Hypergraph build_ht(int depth) {
  if (depth < 1) throw DomainError("build_ht: depth must be at least 1");
  if (depth > 20) throw CapacityError("build_ht: depth too large");
  // Node names spell the path from the root: "r", "r0", "r01", ...
  std::vector<std::string> names{"r"};
  std::vector<std::string> frontier{"r"};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::string> next;
    for (const auto& n : frontier) {
      next.push_back(n + "0");
      next.push_back(n + "1");
    }
    names.insert(names.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::vector<std::string>> edges;
  for (const auto& leaf : frontier) {
    std::vector<std::string> path;
    for (std::size_t len = 1; len <= leaf.size(); ++len) path.push_back(leaf.substr(0, len));
    edges.push_back(std::move(path));
  }
  return Hypergraph(std::move(names), edges);
}

namespace {
std::string fn_name(int m, int bit) { return "(" + std::to_string(m) + "," + std::to_string(bit) + ")"; }
}  // namespace

Hypergraph build_fn(int n) {
  if (n < 1) throw DomainError("build_fn: n must be at least 1");
  if (n > 32) throw CapacityError("build_fn: n too large");
  std::vector<std::string> names;
  for (int m = 1; m <= n; ++m) {
    names.push_back(fn_name(m, 0));
    names.push_back(fn_name(m, 1));
  }
  std::vector<std::vector<std::string>> edges;
  // Type 1: column 1 fixed at (1,0); bit m-2 of `choice` picks the row of column m.
  const std::uint64_t type1 = std::uint64_t{1} << (n - 1);
  for (std::uint64_t choice = 0; choice < type1; ++choice) {
    std::vector<std::string> e{fn_name(1, 0)};
    for (int m = 2; m <= n; ++m) e.push_back(fn_name(m, static_cast<int>((choice >> (m - 2)) & 1U)));
    edges.push_back(std::move(e));
  }
  for (int m = 1; m <= n; ++m) edges.push_back({fn_name(m, 0), fn_name(m, 1)});
  return Hypergraph(std::move(names), edges);
}

Hypergraph build_clique_game(int board_n, int goal_k) {
  if (goal_k < 2 || goal_k > board_n) throw DomainError("build_clique_game: need 2 <= goal_k <= board_n");
  const long long pairs = static_cast<long long>(board_n) * (board_n - 1) / 2;
  if (pairs > static_cast<long long>(kSolverVertexCap)) {
    throw CapacityError("build_clique_game: C(board_n, 2) exceeds the vertex cap");
  }
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> pair_index(board_n, std::vector<VertexId>(board_n));
  for (int a = 0; a < board_n; ++a) {
    for (int b = a + 1; b < board_n; ++b) {
      pair_index[a][b] = pair_index[b][a] = names.size();
      names.push_back(std::to_string(a) + "-" + std::to_string(b));
    }
  }
  std::vector<Edge> edges;
  std::vector<int> pick(goal_k);
  // Enumerate goal_k-subsets of nodes in lexicographic order.
  for (int i = 0; i < goal_k; ++i) pick[i] = i;
  while (true) {
    Edge e;
    for (int i = 0; i < goal_k; ++i) {
      for (int j = i + 1; j < goal_k; ++j) e.push_back(pair_index[pick[i]][pick[j]]);
    }
    edges.push_back(std::move(e));
    int i = goal_k - 1;
    while (i >= 0 && pick[i] == board_n - goal_k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < goal_k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph::from_indices(std::move(names), std::move(edges));
}

Hypergraph random_hypergraph(std::uint64_t seed, const RandomHypergraphOptions& o) {
  if (o.min_vertices < 1 || o.min_vertices > o.max_vertices || o.min_edges < 1 ||
      o.min_edges > o.max_edges || o.min_edge_size < 1 || o.min_edge_size > o.max_edge_size) {
    throw DomainError("random_hypergraph: inconsistent options");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = uniform(o.min_vertices, o.max_vertices);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  const std::size_t m = uniform(o.min_edges, o.max_edges);
  std::vector<Edge> edges;
  std::vector<VertexId> pool(n);
  for (std::size_t v = 0; v < n; ++v) pool[v] = v;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t size = uniform(std::min(o.min_edge_size, n), std::min(o.max_edge_size, n));
    if (o.singleton_probability > 0.0 && std::bernoulli_distribution(o.singleton_probability)(rng)) size = 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    edges.emplace_back(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  }
  return Hypergraph::from_indices(std::move(names), std::move(edges));
}

}  // namespace achieve
