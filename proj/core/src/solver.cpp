#include "achieve/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace achieve {

std::string_view to_string(WinCriterion c) {
  switch (c) {
    case WinCriterion::Weak: return "weak";
    case WinCriterion::Strong: return "strong";
    case WinCriterion::Fair: return "fair";
    case WinCriterion::Early: return "early";
    case WinCriterion::Humiliating: return "humiliating";
  }
  return "?";
}

WinCriterion criterion_from_string(std::string_view name) {
  for (WinCriterion c : kAllCriteria) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown win criterion '" + std::string(name) + "'");
}

PlayTimeline play_timeline(const Transcript& transcript, const Hypergraph& h) {
  PlayTimeline t;
  Occupancy occ(h.vertex_count());
  for (std::size_t i = 0; i < transcript.size(); ++i) {
    const Move& m = transcript[i];
    occ.assign(m.vertex, m.player);
    if (m.player == Player::One) {
      if (!t.p1_completion && !completed_edges(occ, h, Player::One).empty()) t.p1_completion = i;
      continue;
    }
    if (!t.p2_completion && !completed_edges(occ, h, Player::Two).empty()) t.p2_completion = i;
    if (!t.p2_unblocked_near_miss && !near_miss_edges(occ, h, Player::Two, true).empty()) {
      t.p2_unblocked_near_miss = i;
    }
    if (!t.p2_near_miss && !near_miss_edges(occ, h, Player::Two, false).empty()) t.p2_near_miss = i;
  }
  return t;
}

bool timeline_outcome(const PlayTimeline& t, WinCriterion criterion) {
  if (!t.p1_completion) return false;
  const std::size_t n = *t.p1_completion;
  const bool weak = true;
  const bool strong = weak && (!t.p2_completion || n < *t.p2_completion);
  // A turn is a P1 move followed by a P2 move: move i belongs to turn i / 2.
  const bool fair = strong && (!t.p2_completion || n / 2 < *t.p2_completion / 2);
  const bool early = fair && (!t.p2_unblocked_near_miss || *t.p2_unblocked_near_miss / 2 > n / 2);
  const bool humiliating = early && (!t.p2_near_miss || *t.p2_near_miss > n);
  switch (criterion) {
    case WinCriterion::Weak: return weak;
    case WinCriterion::Strong: return strong;
    case WinCriterion::Fair: return fair;
    case WinCriterion::Early: return early;
    case WinCriterion::Humiliating: return humiliating;
  }
  return false;
}

bool play_outcome(const Transcript& transcript, const Hypergraph& h, WinCriterion criterion) {
  if (transcript.size() != h.vertex_count()) {
    throw DomainError("play_outcome needs a complete play (" + std::to_string(transcript.size()) + " of " +
                      std::to_string(h.vertex_count()) + " vertices taken)");
  }
  return timeline_outcome(play_timeline(transcript, h), criterion);
}

SearchGoal goal_for(WinCriterion c) {
  switch (c) {
    case WinCriterion::Weak: return SearchGoal::P1Weak;
    case WinCriterion::Strong: return SearchGoal::P1Strong;
    case WinCriterion::Fair: return SearchGoal::P1Fair;
    case WinCriterion::Early: return SearchGoal::P1Early;
    case WinCriterion::Humiliating: return SearchGoal::P1Humiliating;
  }
  return SearchGoal::P1Weak;
}

namespace {

enum Flag : std::uint8_t {
  kP1Done = 1,
  kP2Done = 2,
  kEarlyViolated = 4,  // P2 near-miss on a P1-free edge, up to P1's completing turn
  kHumiliated = 8,     // P2 near-miss on any edge, strictly before P1 completes
};

struct State {
  VertexMask p1 = 0;
  VertexMask p2 = 0;
  std::uint8_t flags = 0;

  bool p1_to_move() const { return std::popcount(p1) == std::popcount(p2); }
  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t x = s.p1 * 0x9E3779B97F4A7C15ULL;
    x ^= (s.p2 + 0x632BE59BD9B4E019ULL + (x << 6) + (x >> 2));
    x ^= static_cast<std::uint64_t>(s.flags) * 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

class TranspositionTable {
 public:
  std::optional<bool> find(const State& s) {
    Shard& shard = shard_for(s);
    std::lock_guard lock(shard.mutex);
    auto it = shard.map.find(s);
    if (it == shard.map.end()) return std::nullopt;
    return it->second;
  }

  void store(const State& s, bool value) {
    Shard& shard = shard_for(s);
    std::lock_guard lock(shard.mutex);
    shard.map.insert_or_assign(s, value);
  }

  std::size_t size() {
    std::size_t total = 0;
    for (auto& shard : shards_) {
      std::lock_guard lock(shard.mutex);
      total += shard.map.size();
    }
    return total;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_map<State, bool, StateHash> map;
  };
  static constexpr std::size_t kShards = 64;

  Shard& shard_for(const State& s) { return shards_[StateHash{}(s) % kShards]; }

  std::array<Shard, kShards> shards_;
};

}  // namespace

struct Solver::Impl {
  Impl(const Hypergraph& h, SearchGoal g, SolveOptions o)
      : masks(h.edge_masks()), goal(g), options(o), vertex_count(h.vertex_count()) {
    full = vertex_count == 64 ? ~VertexMask{0} : (VertexMask{1} << vertex_count) - 1;
    sizes.reserve(masks.size());
    for (VertexMask m : masks) sizes.push_back(std::popcount(m));
  }

  std::vector<VertexMask> masks;
  std::vector<int> sizes;
  SearchGoal goal;
  SolveOptions options;
  std::size_t vertex_count;
  VertexMask full = 0;
  TranspositionTable table;
  std::atomic<std::uint64_t> nodes{0};

  Player forcer() const { return goal == SearchGoal::P2Strong ? Player::Two : Player::One; }

  bool completes(VertexMask own) const {
    return std::any_of(masks.begin(), masks.end(), [own](VertexMask m) { return (m & ~own) == 0; });
  }

  State play(State s, VertexId v) const {
    const VertexMask bit = VertexMask{1} << v;
    if (s.p1_to_move()) {
      s.p1 |= bit;
      if (!(s.flags & kP1Done) && completes(s.p1)) s.flags |= kP1Done;
      return s;
    }
    s.p2 |= bit;
    if (!(s.flags & kP2Done) && completes(s.p2)) s.flags |= kP2Done;
    bool near = false;
    bool unblocked = false;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (std::popcount(masks[i] & s.p2) + 1 == sizes[i]) {
        near = true;
        if ((masks[i] & s.p1) == 0) unblocked = true;
      }
    }
    if (unblocked) s.flags |= kEarlyViolated;
    if (near && !(s.flags & kP1Done)) s.flags |= kHumiliated;
    return s;
  }

  std::optional<bool> decided(const State& s) const {
    const bool board_full = (s.p1 | s.p2) == full;
    const bool p1_done = s.flags & kP1Done;
    const bool p2_done = s.flags & kP2Done;
    // P1 completed and P2 has had its reply in the same turn (or cannot move).
    const bool turn_closed = p1_done && (s.p1_to_move() || board_full);
    switch (goal) {
      case SearchGoal::P1Weak:
        if (p1_done) return true;
        break;
      case SearchGoal::P1Strong:
        if (p2_done) return false;
        if (p1_done) return true;
        break;
      case SearchGoal::P1Fair:
        if (p2_done) return false;
        if (turn_closed) return true;
        break;
      case SearchGoal::P1Early:
        if (p2_done || (s.flags & kEarlyViolated)) return false;
        if (turn_closed) return true;
        break;
      case SearchGoal::P1Humiliating:
        if (p2_done || (s.flags & (kEarlyViolated | kHumiliated))) return false;
        if (turn_closed) return true;
        break;
      case SearchGoal::P2Strong:
        if (p1_done) return false;
        if (p2_done) return true;
        break;
    }
    if (board_full) return false;
    return std::nullopt;
  }

  bool search(const State& s) {
    nodes.fetch_add(1, std::memory_order_relaxed);
    if (auto d = decided(s)) return *d;
    if (auto cached = table.find(s)) return *cached;
    const bool maximizing = (s.p1_to_move() ? Player::One : Player::Two) == forcer();
    bool result = !maximizing;
    VertexMask open = full & ~(s.p1 | s.p2);
    while (open) {
      const auto v = static_cast<VertexId>(std::countr_zero(open));
      open &= open - 1;
      const bool child = search(play(s, v));
      if (child == maximizing) {
        result = maximizing;
        break;
      }
    }
    table.store(s, result);
    return result;
  }

  bool search_root(const State& s) {
    if (options.threads <= 1) return search(s);
    if (auto d = decided(s)) return *d;
    const bool maximizing = (s.p1_to_move() ? Player::One : Player::Two) == forcer();
    std::vector<VertexId> moves;
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (!((s.p1 | s.p2) >> v & 1U)) moves.push_back(v);
    }
    std::vector<char> values(moves.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < moves.size(); i = next.fetch_add(1)) {
        values[i] = search(play(s, moves[i])) ? 1 : 0;
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    bool result = !maximizing;
    for (char v : values) {
      if (static_cast<bool>(v) == maximizing) result = maximizing;
    }
    table.store(s, result);
    return result;
  }

  State replay(const Transcript& transcript) const {
    State s;
    for (const Move& m : transcript.moves()) {
      if (m.vertex >= vertex_count) throw DomainError("transcript vertex out of range");
      s = play(s, m.vertex);
    }
    return s;
  }
};

Solver::Solver(const Hypergraph& h, SearchGoal goal, SolveOptions options)
    : impl_(new Impl(h, goal, options)) {}

Solver::~Solver() { delete impl_; }

bool Solver::solve() { return impl_->search_root(State{}); }

bool Solver::value(const Transcript& transcript) { return impl_->search(impl_->replay(transcript)); }

VertexId Solver::best_move(const Transcript& transcript) {
  const State s = impl_->replay(transcript);
  if (impl_->decided(s)) throw DomainError("best_move: the game is already decided");
  const bool maximizing = (s.p1_to_move() ? Player::One : Player::Two) == impl_->forcer();
  std::optional<VertexId> fallback;
  for (VertexId v = 0; v < impl_->vertex_count; ++v) {
    if ((s.p1 | s.p2) >> v & 1U) continue;
    if (!fallback) fallback = v;
    if (impl_->search(impl_->play(s, v)) == maximizing) return v;
  }
  if (!fallback) throw DomainError("best_move: the board is full");
  return *fallback;
}

SolveStats Solver::stats() const { return SolveStats{impl_->nodes.load(), impl_->table.size()}; }

bool solve(const Hypergraph& h, WinCriterion criterion, SolveStats* stats, SolveOptions options) {
  Solver solver(h, goal_for(criterion), options);
  const bool v = solver.solve();
  if (stats) *stats = solver.stats();
  return v;
}

bool solve_second_player_strong(const Hypergraph& h, SolveStats* stats) {
  Solver solver(h, SearchGoal::P2Strong);
  const bool v = solver.solve();
  if (stats) *stats = solver.stats();
  return v;
}

bool WinReport::monotone() const {
  for (std::size_t i = 1; i < forced.size(); ++i) {
    if (forced[i] && !forced[i - 1]) return false;
  }
  return true;
}

WinReport classify(const Hypergraph& h, SolveOptions options) {
  WinReport report;
  for (WinCriterion c : kAllCriteria) {
    SolveStats stats;
    report.forced[static_cast<std::size_t>(c)] = solve(h, c, &stats, options);
    report.nodes += stats.nodes;
    report.table_size += stats.table_size;
  }
  return report;
}

VertexId best_move(const Transcript& transcript, const Hypergraph& h, WinCriterion criterion) {
  Solver solver(h, goal_for(criterion));
  return solver.best_move(transcript);
}

namespace {

// Contribution of each live edge, or nullopt for edges the blocker touched.
template <typename F>
void for_each_live_edge(const Occupancy& occ, const Hypergraph& h, Player maker, F&& f) {
  const Player blocker = opponent(maker);
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    std::size_t mine = 0;
    bool dead = false;
    for (VertexId v : e) {
      if (occ.owns(blocker, v)) {
        dead = true;
        break;
      }
      if (occ.owns(maker, v)) ++mine;
    }
    if (dead) continue;
    f(e, std::ldexp(1.0, -static_cast<int>(e.size() - mine)));
  }
}

}  // namespace

double es_potential(const Occupancy& occ, const Hypergraph& h, Player maker) {
  double total = 0.0;
  for_each_live_edge(occ, h, maker, [&](const Edge&, double w) { total += w; });
  return total;
}

VertexId es_blocker_move(const Occupancy& occ, const Hypergraph& h, Player maker) {
  std::vector<double> danger(h.vertex_count(), 0.0);
  for_each_live_edge(occ, h, maker, [&](const Edge& e, double w) {
    for (VertexId v : e) {
      if (occ.is_free(v)) danger[v] += w;
    }
  });
  std::optional<VertexId> best;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (!occ.is_free(v)) continue;
    if (!best || danger[v] > danger[*best]) best = v;
  }
  if (!best) throw IllegalMoveError("es_blocker_move: no free vertex");
  return *best;
}

namespace {

struct MakerSearch {
  const Hypergraph& h;
  const BlockerPolicy& blocker;
  std::vector<VertexMask> masks;
  std::unordered_map<State, bool, StateHash> memo;

  bool filled(VertexMask own) const {
    return std::any_of(masks.begin(), masks.end(), [own](VertexMask m) { return (m & ~own) == 0; });
  }

  Occupancy to_occupancy(VertexMask maker, VertexMask block) const {
    Occupancy occ(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
      if (maker >> v & 1U) occ.assign(v, Player::One);
      if (block >> v & 1U) occ.assign(v, Player::Two);
    }
    return occ;
  }

  // Maker to move.
  bool run(VertexMask maker, VertexMask block) {
    const State key{maker, block, 0};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = false;
    for (VertexId v = 0; v < h.vertex_count() && !result; ++v) {
      const VertexMask bit = VertexMask{1} << v;
      if ((maker | block) & bit) continue;
      const VertexMask next = maker | bit;
      if (filled(next)) {
        result = true;
        break;
      }
      if (std::popcount(next | block) == static_cast<int>(h.vertex_count())) continue;
      const VertexId reply = blocker(to_occupancy(next, block), h);
      const VertexMask rbit = VertexMask{1} << reply;
      if (reply >= h.vertex_count() || ((next | block) & rbit)) {
        throw IllegalMoveError("blocker policy returned an occupied or unknown vertex");
      }
      result = run(next, block | rbit);
    }
    memo.emplace(key, result);
    return result;
  }
};

}  // namespace

bool maker_can_fill(const Hypergraph& h, const BlockerPolicy& blocker) {
  MakerSearch search{h, blocker, h.edge_masks(), {}};
  if (search.filled(0)) return true;
  return search.run(0, 0);
}

}  // namespace achieve
