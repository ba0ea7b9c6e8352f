#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "achieve/io.hpp"

namespace achieve::tools {

// Report for the hypergraph at `path`, restricted to `criteria` when non-empty.
Json solve_file(const std::filesystem::path& path, const std::vector<WinCriterion>& criteria, std::ostream& warn);

struct SimulateOptions {
  std::vector<AdversaryKind> adversaries;
  int moves = 300;
  int seeds = 25;
  std::uint64_t first_seed = 1;
  // Transcripts go to <out>/<adversary>-seed<k>.jsonl when set.
  std::filesystem::path out;
};

struct SimulationRow {
  AdversaryKind adversary;
  std::uint64_t seed;
  Verdict verdict;
};

// Runs every (adversary, seed) pair; writes transcripts and a tab-separated
// summary (header plus one row per run) to `table`.
std::vector<SimulationRow> run_simulations(const SimulateOptions& options, std::ostream& table);

struct LemmaSuiteRow {
  std::string name;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool no_p2_strong = false;
  bool humiliating_forced = false;
  bool singleton_edge = false;
  bool reduction_holds = false;
  bool passed() const;
};

struct LemmaSuiteOptions {
  std::size_t max_vertices = 8;
  std::size_t instances = 200;
  std::uint64_t seed = 2024;
  std::vector<std::filesystem::path> fixtures;
};

std::vector<LemmaSuiteRow> lemma_suite(const LemmaSuiteOptions& options);
Json to_json(const std::vector<LemmaSuiteRow>& rows);

// Named hypergraphs classified by `classify-suite` when no files are given.
std::vector<std::pair<std::string, Hypergraph>> builtin_suite();

}  // namespace achieve::tools
