#include "achieve/session.hpp"

#include <cmath>
#include <fstream>

#include "achieve/errors.hpp"

namespace achieve {

Session::Session(std::string id_, double t_, BotConfig config)
    : id(std::move(id_)), t(t_), game(std::move(config)), created(std::chrono::system_clock::now()),
      updated(created) {}

BotConfig session_config(double t) {
  BotConfig cfg;
  cfg.goal = GoalSet(t);
  cfg.eps = kEpsHuman;
  return cfg;
}

SessionManager::SessionManager(std::optional<std::filesystem::path> snapshot_dir)
    : snapshot_dir_(std::move(snapshot_dir)) {
  if (snapshot_dir_) std::filesystem::create_directories(*snapshot_dir_);
}

namespace {

Response error(int status, std::string message) { return {status, Json{{"error", std::move(message)}}}; }

Json threats_json(const std::vector<Threat>& threats) {
  Json out = Json::array();
  for (const auto& t : threats) {
    const Vec2 m = t.missing_point();
    out.push_back({{"missing", {{"x", m.x}, {"y", m.y}}}, {"copy", to_json(t.copy)}});
  }
  return out;
}

}  // namespace

Json SessionManager::state(const Session& s) {
  const Game& g = s.game;
  const BotConfig& cfg = g.bot().config();
  const BotState& bot = g.bot().state();
  Json p1 = Json::array();
  Json p2 = Json::array();
  for (const auto& p : g.p1()) p1.push_back(to_json(p));
  for (const auto& p : g.p2()) p2.push_back(to_json(p));
  Json circle = nullptr;
  if (bot.progression) {
    const auto& pr = *bot.progression;
    circle = {{"id", pr.circle_id}, {"center", {pr.center.x, pr.center.y}}, {"radius", 1.0}};
  }
  Json winner = nullptr;
  if (auto w = g.winner()) winner = static_cast<int>(*w);
  return {{"id", s.id},
          {"moves", g.verdict().moves},
          {"p1", std::move(p1)},
          {"p2", std::move(p2)},
          {"phase", phase_name(bot.phase)},
          {"circle", std::move(circle)},
          {"threats",
           {{"p1", threats_json(find_threats(g.p1(), g.p2(), cfg.goal, cfg.eps, Player::One))},
            {"p2", threats_json(find_threats(g.p2(), g.p1(), cfg.goal, cfg.eps, Player::Two))}}},
          {"last_blocked", bot.last_blocked ? to_json(*bot.last_blocked) : Json(nullptr)},
          {"winner", std::move(winner)},
          {"violations", bot.violations},
          {"t", s.t},
          {"theta", cfg.goal.theta()}};
}

std::shared_ptr<Session> SessionManager::find(std::string_view id) const {
  std::lock_guard lock(map_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response SessionManager::create(const Json& body) {
  double t = default_t();
  if (!body.is_null() && !body.is_object()) return error(422, "body must be a JSON object");
  if (body.is_object() && body.contains("t")) {
    if (!body.at("t").is_number()) return error(422, "t must be a number");
    t = body.at("t").get<double>();
    if (!(t > 0.0 && t < 1.0 / 9.0)) return error(422, "t must lie in (0, 1/9)");
  }
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(map_mutex_);
    const std::string id = "g" + std::to_string(next_id_++);
    s = std::make_shared<Session>(id, t, session_config(t));
    sessions_.emplace(id, s);
  }
  std::lock_guard lock(s->mutex);
  s->log.push_back("created");
  if (snapshot_dir_) {
    std::ofstream out(*snapshot_dir_ / (s->id + ".jsonl"), std::ios::trunc);
    out << Json{{"id", s->id}, {"t", t}}.dump() << '\n';
  }
  return {201, Json{{"id", s->id}, {"state", state(*s)}}};
}

void SessionManager::snapshot(const Session& s, const PlayedPoint& m) const {
  if (!snapshot_dir_) return;
  std::ofstream out(*snapshot_dir_ / (s.id + ".jsonl"), std::ios::app);
  out << Json{{"i", m.i}, {"player", static_cast<int>(m.player)}, {"x", m.point.x}, {"y", m.point.y},
              {"phase", m.phase}}
             .dump()
      << '\n';
}

Response SessionManager::move(std::string_view id, const Json& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown session");
  if (!body.is_object() || !body.contains("x") || !body.contains("y") || !body.at("x").is_number() ||
      !body.at("y").is_number()) {
    return error(422, "body must be {\"x\": number, \"y\": number}");
  }
  const Vec2 click{body.at("x").get<double>(), body.at("y").get<double>()};
  if (!std::isfinite(click.x) || !std::isfinite(click.y)) return error(422, "coordinates must be finite");
  std::lock_guard lock(s->mutex);
  std::optional<PlanarPoint> reply;
  try {
    reply = s->game.play(s->game.snap(click));
  } catch (const IllegalMoveError& e) {
    return error(409, e.what());
  }
  s->updated = std::chrono::system_clock::now();
  const auto& tr = s->game.transcript();
  const std::size_t first = reply ? tr.size() - 2 : tr.size() - 1;
  for (std::size_t i = first; i < tr.size(); ++i) {
    snapshot(*s, tr[i]);
    s->log.push_back("move " + std::to_string(tr[i].i));
  }
  return {200, Json{{"bot_reply", reply ? to_json(*reply) : Json(nullptr)}, {"state", state(*s)}}};
}

Response SessionManager::get(std::string_view id) const {
  auto s = find(id);
  if (!s) return error(404, "unknown session");
  std::lock_guard lock(s->mutex);
  return {200, state(*s)};
}

std::size_t SessionManager::restore() {
  if (!snapshot_dir_) return 0;
  std::size_t restored = 0;
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_dir_)) {
    if (entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    std::string line;
    if (!std::getline(in, line)) continue;
    const Json header = Json::parse(line);
    const std::string id = header.at("id").get<std::string>();
    const double t = header.at("t").get<double>();
    auto s = std::make_shared<Session>(id, t, session_config(t));
    while (std::getline(in, line)) {
      const Json j = Json::parse(line);
      if (j.at("player").get<int>() != 1) continue;
      const Vec2 click{j.at("x").get<double>(), j.at("y").get<double>()};
      s->game.play(s->game.snap(click));
    }
    s->log.push_back("restored");
    std::lock_guard lock(map_mutex_);
    sessions_[id] = s;
    if (id.size() > 1 && id[0] == 'g') {
      next_id_ = std::max<std::uint64_t>(next_id_, std::stoull(id.substr(1)) + 1);
    }
    ++restored;
  }
  return restored;
}

}  // namespace achieve
