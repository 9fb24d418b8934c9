// Copyright 2026 The cccr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cccr/http_server.h"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "httplib.h"

namespace cccr {
namespace {

void Reply(httplib::Response& res, const HttpResult& result) {
  res.status = result.status;
  res.set_content(result.body.dump(), "application/json");
}

std::optional<Json> ParseBody(const httplib::Request& req,
                              httplib::Response& res) {
  Json body = Json::parse(req.body, nullptr, false);
  if (body.is_discarded()) {
    Reply(res, {400, {{"error", "request body is not valid JSON"}}});
    return std::nullopt;
  }
  return body;
}

}  // namespace

int DefaultPort() {
  const char* env = std::getenv("CCCR_PORT");
  if (env == nullptr) return kDefaultPort;
  const std::string_view text(env);
  int port = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), port);
  if (ec != std::errc() || ptr != text.data() + text.size() || port < 1 ||
      port > 65535) {
    return kDefaultPort;
  }
  return port;
}

HttpServer::HttpServer(PlayService& service, ServerOptions options)
    : service_(service), options_(std::move(options)),
      server_(std::make_unique<httplib::Server>()) {
  httplib::Server& s = *server_;
  s.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    if (auto body = ParseBody(req, res)) Reply(res, service_.CreateSession(*body));
  });
  s.Post(R"(/sessions/([^/]+)/moves)",
         [this](const httplib::Request& req, httplib::Response& res) {
           if (auto body = ParseBody(req, res)) {
             Reply(res, service_.SubmitMove(req.matches[1], *body));
           }
         });
  s.Get(R"(/sessions/([^/]+))",
        [this](const httplib::Request& req, httplib::Response& res) {
          Reply(res, service_.GetState(req.matches[1]));
        });
  s.Get(R"(/graphs/([^/]+)/solution)",
        [this](const httplib::Request& req, httplib::Response& res) {
          int cops = 1;
          if (req.has_param("cops")) {
            const std::string text = req.get_param_value("cops");
            const auto [ptr, ec] =
                std::from_chars(text.data(), text.data() + text.size(), cops);
            if (ec != std::errc() || ptr != text.data() + text.size()) {
              Reply(res, {400, {{"error", "cops must be an integer"}}});
              return;
            }
          }
          Reply(res, service_.GetSolution(req.matches[1], cops));
        });
  if (!options_.static_dir.empty() &&
      !s.set_mount_point("/", options_.static_dir)) {
    throw std::runtime_error("cannot serve static directory '" +
                             options_.static_dir + "'");
  }
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind() {
  if (options_.port == 0) {
    const int port = server_->bind_to_any_port(options_.host);
    if (port < 0) throw std::runtime_error("cannot bind " + options_.host);
    return port;
  }
  if (!server_->bind_to_port(options_.host, options_.port)) {
    throw std::runtime_error("cannot bind " + options_.host + ":" +
                             std::to_string(options_.port));
  }
  return options_.port;
}

void HttpServer::Serve() { server_->listen_after_bind(); }

void HttpServer::Stop() {
  if (server_->is_running()) server_->stop();
}

}  // namespace cccr
