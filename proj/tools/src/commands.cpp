#include "achieve_tools/commands.hpp"

#include <fstream>
#include <ostream>

#include "achieve/errors.hpp"
#include "achieve/strategy_steal.hpp"

namespace achieve::tools {

Json solve_file(const std::filesystem::path& path, const std::vector<WinCriterion>& criteria, std::ostream& warn) {
  const Hypergraph h = load_hypergraph(path);
  if (h.duplicates_dropped() > 0) {
    warn << "warning: dropped " << h.duplicates_dropped() << " duplicate edge(s) from " << path.string() << '\n';
  }
  if (!h.fits_solver()) {
    throw CapacityError("hypergraph has " + std::to_string(h.vertex_count()) + " vertices; the solver supports " +
                        std::to_string(kSolverVertexCap));
  }
  if (criteria.empty()) return to_json(classify(h));
  Json out = Json::object();
  std::uint64_t nodes = 0;
  for (WinCriterion c : criteria) {
    SolveStats stats;
    out[std::string(to_string(c))] = solve(h, c, &stats);
    nodes += stats.nodes;
  }
  out["nodes"] = nodes;
  return out;
}

std::vector<SimulationRow> run_simulations(const SimulateOptions& options, std::ostream& table) {
  if (!options.out.empty()) std::filesystem::create_directories(options.out);
  table << "adversary\tseed\tmoves\tp1_completed\tp2_completed\tthreats_unblocked\tviolations\n";
  std::vector<SimulationRow> rows;
  for (AdversaryKind kind : options.adversaries) {
    for (int k = 0; k < options.seeds; ++k) {
      const std::uint64_t seed = options.first_seed + static_cast<std::uint64_t>(k);
      const SimulationResult r = simulate(kind, options.moves, seed);
      if (!options.out.empty()) {
        const auto path = options.out / (to_string(kind) + "-seed" + std::to_string(seed) + ".jsonl");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + path.string());
        out << transcript_jsonl(r.transcript);
        if (!out) throw Error("write failed: " + path.string());
      }
      const Verdict& v = r.verdict;
      table << to_string(kind) << '\t' << seed << '\t' << v.moves << '\t' << v.p1_completed << '\t'
            << v.p2_completed << '\t' << v.threats_unblocked << '\t' << v.violations.size() << '\n';
      rows.push_back({kind, seed, v});
    }
  }
  return rows;
}

bool LemmaSuiteRow::passed() const {
  return no_p2_strong && (!humiliating_forced || singleton_edge) && reduction_holds;
}

std::vector<LemmaSuiteRow> lemma_suite(const LemmaSuiteOptions& options) {
  std::vector<std::pair<std::string, Hypergraph>> cases;
  for (const auto& f : options.fixtures) cases.emplace_back(f.filename().string(), load_hypergraph(f));
  RandomHypergraphOptions gen;
  gen.max_vertices = options.max_vertices;
  gen.min_edge_size = 2;
  gen.singleton_probability = 0.05;
  for (std::size_t i = 0; i < options.instances; ++i) {
    cases.emplace_back("random-" + std::to_string(i), random_hypergraph(options.seed + i, gen));
  }
  std::vector<LemmaSuiteRow> rows;
  for (const auto& [name, h] : cases) {
    const HumiliationCheck check = check_no_humiliating(h);
    rows.push_back({name, h.vertex_count(), h.edge_count(), verify_no_p2_strong(h), check.humiliating_forced,
                    check.singleton_carve_out, check.reduction_holds});
  }
  return rows;
}

Json to_json(const std::vector<LemmaSuiteRow>& rows) {
  Json table = Json::array();
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.passed();
    table.push_back({{"name", r.name},
                     {"vertices", r.vertices},
                     {"edges", r.edges},
                     {"no_p2_strong", r.no_p2_strong},
                     {"humiliating_forced", r.humiliating_forced},
                     {"excluded_singleton_edge", r.humiliating_forced && r.singleton_edge},
                     {"reduction_holds", r.reduction_holds},
                     {"pass", r.passed()}});
  }
  return {{"instances", std::move(table)}, {"pass", all}};
}

std::vector<std::pair<std::string, Hypergraph>> builtin_suite() {
  return {{"H_T(1)", build_ht(1)}, {"H_T(2)", build_ht(2)}, {"F_2", build_fn(2)},
          {"F_3", build_fn(3)},    {"K_4 triangles", build_clique_game(4, 3)}};
}

}  // namespace achieve::tools
