#pragma once

#include <memory>
#include <string>

#include "achieve/session.hpp"

namespace achieve::tools {

/// HTTP front end over SessionManager:
///   POST /games            {t?}    -> 201 {id, state}
///   POST /games/{id}/move  {x, y}  -> 200 {bot_reply, state}
///   GET  /games/{id}               -> 200 state
class HttpServer {
 public:
  explicit HttpServer(SessionManager& sessions);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds to host:port (port 0 picks a free one) and returns the bound port,
  // or -1 on failure.
  int bind(const std::string& host, int port);
  // Serves until stop() is called. Blocks.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace achieve::tools
