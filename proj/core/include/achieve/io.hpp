#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "achieve/hypergraph.hpp"
#include "achieve/lemma.hpp"
#include "achieve/simulate.hpp"
#include "achieve/solver.hpp"

namespace achieve {

using Json = nlohmann::json;

// Throws ParseError on malformed input. Duplicate edges are dropped; the
// count is available from Hypergraph::duplicates_dropped.
Hypergraph hypergraph_from_json(const Json& j);
Hypergraph load_hypergraph(const std::filesystem::path& path);
Json to_json(const Hypergraph& h);

// One line per move: {"i", "player", "vertex"}.
std::string transcript_jsonl(const Transcript& t, const Hypergraph& h);
Transcript transcript_from_jsonl(std::istream& in, const Hypergraph& h);

Json to_json(const WinReport& r);
Json to_json(const PlanarPoint& p);
PlanarPoint point_from_json(const Json& j);
Json to_json(const LemmaReport& r);
Json to_json(const Verdict& v);
Json to_json(const CopyOfG& c);

// One line per move: {"i", "player", "x", "y", "phase"}.
std::string transcript_jsonl(const std::vector<PlayedPoint>& t);

}  // namespace achieve
