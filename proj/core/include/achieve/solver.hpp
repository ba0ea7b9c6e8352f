#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>

#include "achieve/hypergraph.hpp"

namespace achieve {

// Ordered from weakest to strongest. On any single play a criterion implies
// every weaker one.
enum class WinCriterion : std::uint8_t { Weak, Strong, Fair, Early, Humiliating };

inline constexpr std::array<WinCriterion, 5> kAllCriteria{
    WinCriterion::Weak, WinCriterion::Strong, WinCriterion::Fair, WinCriterion::Early,
    WinCriterion::Humiliating};

std::string_view to_string(WinCriterion c);
WinCriterion criterion_from_string(std::string_view name);

/// First-occurrence move indices (0-based) extracted from a play.
struct PlayTimeline {
  std::optional<std::size_t> p1_completion;
  std::optional<std::size_t> p2_completion;
  // P2 move after which P2 held |e|-1 of some edge e carrying no P1 vertex.
  std::optional<std::size_t> p2_unblocked_near_miss;
  // P2 move after which P2 held |f|-1 of some edge f, blocked or not.
  std::optional<std::size_t> p2_near_miss;
};

PlayTimeline play_timeline(const Transcript& transcript, const Hypergraph& h);

// Evaluates `criterion` on a complete play (every vertex taken).
// Throws DomainError on an incomplete transcript.
bool play_outcome(const Transcript& transcript, const Hypergraph& h, WinCriterion criterion);

// Same predicate evaluated on a timeline; also valid for partial plays that
// are already decided.
bool timeline_outcome(const PlayTimeline& t, WinCriterion criterion);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::size_t table_size = 0;
};

struct SolveOptions {
  // Root children are evaluated on this many worker threads sharing one table.
  unsigned threads = 1;
};

// What the exhaustive search is asked to decide.
enum class SearchGoal : std::uint8_t {
  P1Weak,
  P1Strong,
  P1Fair,
  P1Early,
  P1Humiliating,
  P2Strong,  // second player completes an edge strictly before the first
};

SearchGoal goal_for(WinCriterion c);

/// Memoized backwards labeling of the full game tree for one goal.
///
/// Positions are (p1 mask, p2 mask, flag nibble); the mover follows from the
/// population counts. The table is sharded and safe for concurrent use; values
/// stored for a key are unique so races only duplicate work.
class Solver {
 public:
  Solver(const Hypergraph& h, SearchGoal goal, SolveOptions options = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  // Can the goal's forcing side guarantee the goal from the empty board?
  bool solve();

  // Value of the position reached by `transcript`.
  bool value(const Transcript& transcript);

  // A move preserving the minimax value for the side to move; lowest vertex
  // index among equals. Throws DomainError when the game is already decided
  // or the board is full.
  VertexId best_move(const Transcript& transcript);

  SolveStats stats() const;

 private:
  struct Impl;
  Impl* impl_;
};

bool solve(const Hypergraph& h, WinCriterion criterion, SolveStats* stats = nullptr,
           SolveOptions options = {});

// True iff the second player can force a strong win (never expected).
bool solve_second_player_strong(const Hypergraph& h, SolveStats* stats = nullptr);

struct WinReport {
  std::array<bool, 5> forced{};
  std::uint64_t nodes = 0;
  std::size_t table_size = 0;

  bool operator[](WinCriterion c) const { return forced[static_cast<std::size_t>(c)]; }
  bool monotone() const;
};

WinReport classify(const Hypergraph& h, SolveOptions options = {});

VertexId best_move(const Transcript& transcript, const Hypergraph& h, WinCriterion criterion);

// Erdos-Selfridge danger: sum over edges the blocker has not touched of
// 2^-(unclaimed vertices of the edge).
double es_potential(const Occupancy& occ, const Hypergraph& h, Player maker = Player::One);

// Free vertex with the largest summed danger over live edges through it;
// lowest index wins ties. Throws IllegalMoveError on a full board.
VertexId es_blocker_move(const Occupancy& occ, const Hypergraph& h, Player maker = Player::One);

using BlockerPolicy = std::function<VertexId(const Occupancy&, const Hypergraph&)>;

// Maker moves first and searches exhaustively; the blocker answers with
// `blocker`. True iff maker can fully occupy some edge.
bool maker_can_fill(const Hypergraph& h, const BlockerPolicy& blocker);

}  // namespace achieve
