#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "achieve/io.hpp"
#include "achieve/simulate.hpp"

namespace achieve {

struct Session {
  std::string id;
  double t = 0.0;
  Game game;
  std::vector<std::string> log;  // append-only
  std::chrono::system_clock::time_point created;
  std::chrono::system_clock::time_point updated;
  mutable std::mutex mutex;

  Session(std::string id_, double t_, BotConfig config);
};

struct Response {
  int status = 200;
  Json body;
};

/// In-memory human-vs-bot games. Requests on one session are serialized by its
/// own mutex; different sessions run concurrently. With a snapshot directory,
/// every session is mirrored to <dir>/<id>.jsonl and can be restored.
class SessionManager {
 public:
  explicit SessionManager(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

  Response create(const Json& body);
  Response move(std::string_view id, const Json& body);
  Response get(std::string_view id) const;

  // Replays every snapshot file in the snapshot directory. Returns the number
  // of sessions restored.
  std::size_t restore();

  static Json state(const Session& s);

 private:
  std::shared_ptr<Session> find(std::string_view id) const;
  void snapshot(const Session& s, const PlayedPoint& m) const;

  std::optional<std::filesystem::path> snapshot_dir_;
  mutable std::mutex map_mutex_;
  std::map<std::string, std::shared_ptr<Session>, std::less<>> sessions_;
  std::uint64_t next_id_ = 1;
};

BotConfig session_config(double t);

}  // namespace achieve
