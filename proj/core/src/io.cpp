#include "achieve/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "achieve/errors.hpp"

namespace achieve {

Hypergraph hypergraph_from_json(const Json& j) {
  try {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    auto edges = j.at("edges").get<std::vector<std::vector<std::string>>>();
    return Hypergraph(std::move(vertices), edges);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  }
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return hypergraph_from_json(j);
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json names = Json::array();
    for (VertexId v : e) names.push_back(h.name(v));
    edges.push_back(std::move(names));
  }
  return {{"vertices", h.names()}, {"edges", std::move(edges)}};
}

std::string transcript_jsonl(const Transcript& t, const Hypergraph& h) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Json line{{"i", i}, {"player", static_cast<int>(t[i].player)}, {"vertex", h.name(t[i].vertex)}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

Transcript transcript_from_jsonl(std::istream& in, const Hypergraph& h) {
  Transcript t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      if (j.at("i").get<std::size_t>() != t.size()) throw ParseError("transcript move index out of order");
      if (j.at("player").get<int>() != static_cast<int>(t.next_player())) {
        throw ParseError("transcript player does not alternate");
      }
      t = apply_move(t, h, j.at("vertex").get<std::string>());
    } catch (const Json::exception& e) {
      throw ParseError(std::string("transcript JSONL: ") + e.what());
    }
  }
  return t;
}

Json to_json(const WinReport& r) {
  return {{"weak", r[WinCriterion::Weak]},   {"strong", r[WinCriterion::Strong]},
          {"fair", r[WinCriterion::Fair]},   {"early", r[WinCriterion::Early]},
          {"humiliating", r[WinCriterion::Humiliating]}, {"nodes", r.nodes}};
}

Json to_json(const PlanarPoint& p) {
  Json on = nullptr;
  if (p.on) {
    const auto& b = p.on->angle.base();
    on = {{"circle", p.on->circle_id},
          {"base", {b.numerator(), b.denominator()}},
          {"k2", p.on->angle.half_steps()},
          {"center", {p.on->center.x, p.on->center.y}},
          {"exact", p.on->exact}};
  }
  return {{"x", p.x}, {"y", p.y}, {"on", std::move(on)}};
}

PlanarPoint point_from_json(const Json& j) {
  try {
    PlanarPoint p = PlanarPoint::free({j.at("x").get<double>(), j.at("y").get<double>()});
    if (j.contains("on") && !j.at("on").is_null()) {
      const Json& on = j.at("on");
      const auto base = on.at("base").get<std::vector<std::int64_t>>();
      if (base.size() != 2 || base[1] == 0) throw ParseError("point base must be [num, den]");
      Vec2 center{};
      if (on.contains("center")) {
        const auto c = on.at("center").get<std::vector<double>>();
        if (c.size() != 2) throw ParseError("point center must be [x, y]");
        center = {c[0], c[1]};
      }
      p.on = OnCircle{on.at("circle").get<int>(), center, ExactAngle(Rational(base[0], base[1]), on.at("k2").get<std::int64_t>()),
                      on.value("exact", true)};
    }
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("point JSON: ") + e.what());
  }
}

Json to_json(const LemmaReport& r) {
  Json centers = Json::array();
  for (const auto& c : r.best_centers) centers.push_back({c.x, c.y});
  Json counter = nullptr;
  if (r.counterexample) {
    counter = Json::array();
    for (const auto& c : *r.counterexample) counter.push_back({c.x, c.y});
  }
  return {{"samples", r.samples},
          {"valid_samples", r.valid_samples},
          {"skipped_degenerate", r.skipped_degenerate},
          {"descents", r.descents},
          {"min_over_samples_of_max_angle", r.min_over_samples_of_max_angle},
          {"best_centers", std::move(centers)},
          {"max_tangent_arc", r.max_tangent_arc},
          {"counterexample", std::move(counter)}};
}

Json to_json(const Verdict& v) {
  return {{"p1_completed", v.p1_completed},
          {"p2_completed", v.p2_completed},
          {"threats_unblocked", v.threats_unblocked},
          {"moves", v.moves},
          {"violations", v.violations}};
}

Json to_json(const CopyOfG& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back({{"x", p.x}, {"y", p.y}});
  return {{"center", {c.center.x, c.center.y}}, {"base", c.base}, {"orientation", c.orientation}, {"points", pts}};
}

std::string transcript_jsonl(const std::vector<PlayedPoint>& t) {
  std::ostringstream out;
  for (const auto& m : t) {
    const Json line{{"i", m.i}, {"player", static_cast<int>(m.player)}, {"x", m.point.x}, {"y", m.point.y},
                    {"phase", m.phase}};
    out << line.dump() << '\n';
  }
  return out.str();
}

}  // namespace achieve
