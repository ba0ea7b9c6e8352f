#include "achieve_tools/http_server.hpp"

#include <httplib.h>

namespace achieve::tools {

struct HttpServer::Impl {
  SessionManager& sessions;
  httplib::Server server;

  explicit Impl(SessionManager& s) : sessions(s) {}
};

namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

// nullopt when the body is not valid JSON. An empty body reads as null.
std::optional<Json> parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json(nullptr);
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return j;
}

const Response kMalformed{422, Json{{"error", "malformed JSON body"}}};

}  // namespace

HttpServer::HttpServer(SessionManager& sessions) : impl_(std::make_unique<Impl>(sessions)) {
  auto& srv = impl_->server;
  SessionManager* s = &impl_->sessions;

  srv.Post("/games", [s](const httplib::Request& req, httplib::Response& res) {
    auto body = parse_body(req);
    send(res, body ? s->create(*body) : kMalformed);
  });
  srv.Post(R"(/games/([^/]+)/move)", [s](const httplib::Request& req, httplib::Response& res) {
    auto body = parse_body(req);
    send(res, body ? s->move(req.matches[1].str(), *body) : kMalformed);
  });
  srv.Get(R"(/games/([^/]+))", [s](const httplib::Request& req, httplib::Response& res) {
    send(res, s->get(req.matches[1].str()));
  });
  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(Json{{"error", what}}.dump(), "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace achieve::tools
