#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "achieve/errors.hpp"
#include "achieve_tools/commands.hpp"

using namespace achieve;
using namespace achieve::tools;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path kFixtures{ACHIEVE_FIXTURE_DIR};

}  // namespace

TEST(SolveFile, ReportsEveryCriterion) {
  std::ostringstream warn;
  const Json r = solve_file(kFixtures / "ht2.json", {}, warn);
  EXPECT_TRUE(r.at("fair").get<bool>());
  EXPECT_TRUE(r.at("early").get<bool>());
  EXPECT_TRUE(warn.str().empty());
}

TEST(SolveFile, RestrictsToRequestedCriteria) {
  std::ostringstream warn;
  const Json r = solve_file(kFixtures / "k4.json", {WinCriterion::Strong, WinCriterion::Fair}, warn);
  EXPECT_TRUE(r.at("strong").get<bool>());
  EXPECT_FALSE(r.at("fair").get<bool>());
  EXPECT_FALSE(r.contains("early"));
}

TEST(SolveFile, WarnsOnDuplicates) {
  const auto path = std::filesystem::temp_directory_path() / "achieve_dup.json";
  std::ofstream(path) << R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})";
  std::ostringstream warn;
  solve_file(path, {}, warn);
  EXPECT_NE(warn.str().find("duplicate"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(RunSimulations, WritesOneFilePerRunDeterministically) {
  const auto dir = std::filesystem::temp_directory_path() / "achieve_cli_sim";
  std::filesystem::remove_all(dir);
  SimulateOptions o;
  o.adversaries = {AdversaryKind::Random};
  o.moves = 30;
  o.seeds = 3;
  o.out = dir;
  std::ostringstream table;
  const auto rows = run_simulations(o, table);
  ASSERT_EQ(rows.size(), 3u);
  std::vector<std::string> first;
  for (int k = 1; k <= 3; ++k) {
    const auto p = dir / ("random-seed" + std::to_string(k) + ".jsonl");
    ASSERT_TRUE(std::filesystem::exists(p)) << p;
    first.push_back(slurp(p));
  }
  std::ostringstream again;
  run_simulations(o, again);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(slurp(dir / ("random-seed" + std::to_string(k) + ".jsonl")), first[k - 1]);
  EXPECT_EQ(table.str(), again.str());
  EXPECT_EQ(table.str().rfind("adversary\tseed", 0), 0u);
  std::filesystem::remove_all(dir);
}

TEST(LemmaSuite, DeterministicAndPassing) {
  LemmaSuiteOptions o;
  o.instances = 15;
  o.max_vertices = 6;
  o.fixtures = {kFixtures / "ht2.json", kFixtures / "edge1.json"};
  const auto a = lemma_suite(o);
  const auto b = lemma_suite(o);
  ASSERT_EQ(a.size(), 17u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].humiliating_forced, b[i].humiliating_forced);
    EXPECT_TRUE(a[i].passed()) << a[i].name;
  }
  EXPECT_TRUE(to_json(a).at("pass").get<bool>());
}

TEST(BuiltinSuite, HasTheFiveNamedFamilies) {
  const auto suite = builtin_suite();
  EXPECT_EQ(suite.size(), 5u);
}
