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

#ifndef CCCR_HTTP_SERVER_H_
#define CCCR_HTTP_SERVER_H_

// HTTP+JSON front end for PlayService:
//   POST /sessions
//   POST /sessions/{id}/moves
//   GET  /sessions/{id}
//   GET  /graphs/{spec}/solution?cops=K

#include <memory>
#include <string>

#include "cccr/play_service.h"

namespace httplib {
class Server;
}

namespace cccr {

inline constexpr int kDefaultPort = 8080;

// $CCCR_PORT if set to a valid port, otherwise kDefaultPort.
int DefaultPort();

struct ServerOptions {
  std::string host = "127.0.0.1";
  // 0 binds an ephemeral port.
  int port = kDefaultPort;
  // Served at "/" when non-empty.
  std::string static_dir;
};

class HttpServer {
 public:
  HttpServer(PlayService& service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port. Throws std::runtime_error on failure.
  int Bind();
  // Blocks until Stop().
  void Serve();
  void Stop();

 private:
  PlayService& service_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace cccr

#endif  // CCCR_HTTP_SERVER_H_
