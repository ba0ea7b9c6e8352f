#include <CLI11.hpp>

#include <csignal>
#include <iostream>

#include "achieve/errors.hpp"
#include "achieve_tools/commands.hpp"
#include "achieve_tools/http_server.hpp"

namespace {

achieve::tools::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace achieve;
  CLI::App app{"Achievement games on hypergraphs and the plane"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Classify a hypergraph JSON file");
  std::string solve_path;
  std::vector<std::string> criteria_names;
  solve_cmd->add_option("path", solve_path, "Hypergraph JSON")->required();
  solve_cmd->add_option("-c,--criterion", criteria_names, "weak|strong|fair|early|humiliating (repeatable)");

  auto* sim_cmd = app.add_subcommand("simulate", "Run the drawing bot against scripted adversaries");
  std::string adversary = "all";
  tools::SimulateOptions sim;
  std::string sim_out;
  sim_cmd->add_option("-a,--adversary", adversary, "random|threat-greedy|circle-squatter|forcing-mimic|all");
  sim_cmd->add_option("-m,--moves", sim.moves, "Points placed per game (both players)");
  sim_cmd->add_option("-s,--seeds", sim.seeds, "Number of seeds");
  sim_cmd->add_option("--first-seed", sim.first_seed, "First seed");
  sim_cmd->add_option("-o,--out", sim_out, "Directory for JSONL transcripts");

  auto* lemma_cmd = app.add_subcommand("lemma", "Search three-circle configurations");
  std::uint64_t samples = 100000;
  std::uint64_t lemma_seed = 1;
  lemma_cmd->add_option("-n,--samples", samples, "Sampled configurations");
  lemma_cmd->add_option("--seed", lemma_seed, "RNG seed");

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "Strategy-stealing checks on random hypergraphs");
  tools::LemmaSuiteOptions suite;
  std::vector<std::string> fixture_paths;
  verify_cmd->add_option("--max-vertices", suite.max_vertices, "Largest random instance");
  verify_cmd->add_option("--instances", suite.instances, "Random instances");
  verify_cmd->add_option("--seed", suite.seed, "RNG seed");
  verify_cmd->add_option("fixtures", fixture_paths, "Extra hypergraph JSON files");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP game API");
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string snapshots;
  serve_cmd->add_option("-p,--port", port, "Port (0 picks a free one)");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--snapshots", snapshots, "Directory for JSONL session snapshots");

  auto* suite_cmd = app.add_subcommand("classify-suite", "Classify fixtures (or the built-in suite)");
  std::vector<std::string> suite_paths;
  suite_cmd->add_option("paths", suite_paths, "Hypergraph JSON files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      std::vector<WinCriterion> criteria;
      for (const auto& n : criteria_names) criteria.push_back(criterion_from_string(n));
      std::cout << tools::solve_file(solve_path, criteria, std::cerr).dump() << '\n';
    } else if (*sim_cmd) {
      if (adversary == "all") {
        sim.adversaries = {AdversaryKind::Random, AdversaryKind::ThreatGreedy, AdversaryKind::CircleSquatter,
                           AdversaryKind::ForcingMimic};
      } else {
        sim.adversaries = {adversary_from_string(adversary)};
      }
      sim.out = sim_out;
      const auto rows = tools::run_simulations(sim, std::cout);
      for (const auto& r : rows) {
        if (r.verdict.p1_completed || r.verdict.threats_unblocked > 0 || !r.verdict.violations.empty()) return 1;
      }
    } else if (*lemma_cmd) {
      const LemmaReport r = lemma_search(samples, lemma_seed);
      std::cout << to_json(r).dump(2) << '\n';
      if (r.counterexample) return 1;
    } else if (*verify_cmd) {
      for (const auto& f : fixture_paths) suite.fixtures.emplace_back(f);
      const Json table = tools::to_json(tools::lemma_suite(suite));
      std::cout << table.dump(2) << '\n';
      return table.at("pass").get<bool>() ? 0 : 1;
    } else if (*serve_cmd) {
      SessionManager sessions(snapshots.empty() ? std::nullopt
                                                : std::optional<std::filesystem::path>(snapshots));
      if (!snapshots.empty()) std::cerr << "restored " << sessions.restore() << " session(s)\n";
      tools::HttpServer server(sessions);
      const int bound = server.bind(host, port);
      if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
      std::cerr << "listening on http://" << host << ':' << bound << '\n';
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.listen();
      g_server = nullptr;
    } else if (*suite_cmd) {
      std::vector<std::pair<std::string, Hypergraph>> cases;
      if (suite_paths.empty()) {
        cases = tools::builtin_suite();
      } else {
        for (const auto& p : suite_paths) cases.emplace_back(p, load_hypergraph(p));
      }
      for (const auto& [name, h] : cases) {
        Json row = to_json(classify(h));
        row["name"] = name;
        std::cout << row.dump() << '\n';
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
