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

#ifndef CCCR_PLAY_SERVICE_H_
#define CCCR_PLAY_SERVICE_H_

// In-memory play sessions: a human plays one side of the concurrent game,
// the engine plays the other from the solver's mixed strategies. Transport
// free; http_server.h maps these calls onto HTTP routes. Payload schemas are
// described in docs/api.md.

#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include "cccr/concurrent_game.h"
#include "cccr/table_io.h"

namespace cccr {

struct HttpResult {
  int status = 200;
  Json body;
};

// Solver output for one graph and cop count, shared read-only.
struct SolvedGame {
  Graph graph;
  int num_cops = 0;
  ValueTable values;
  std::shared_ptr<const MixedStrategyTable> strategies;
  // Smallest cop count, up to num_cops, that wins the turn-based game.
  std::optional<int> cop_number;
};

// Write-once cache keyed by graph fingerprint and cop count. Concurrent
// requests for the same key wait on a single solve.
class SolveCache {
 public:
  explicit SolveCache(ValueIterationOptions options = {})
      : options_(std::move(options)) {}

  std::shared_ptr<const SolvedGame> Get(const Graph& g, int num_cops);
  std::size_t size() const;

 private:
  using Key = std::pair<std::uint64_t, int>;
  ValueIterationOptions options_;
  mutable std::mutex mu_;
  std::map<Key, std::shared_future<std::shared_ptr<const SolvedGame>>> entries_;
};

struct PlayServiceOptions {
  // Larger position spaces are rejected with 400.
  int max_positions = 1 << 20;
  int max_sessions = 1 << 20;
  ValueIterationOptions solver;
};

class PlayService {
 public:
  explicit PlayService(PlayServiceOptions options = {});
  ~PlayService();
  PlayService(const PlayService&) = delete;
  PlayService& operator=(const PlayService&) = delete;

  // {"graph": spec | "edge_list": text, "cops": K, "human_side": "C"|"R",
  //  "start": {"cops": [...], "robber": ...} | "random", "seed"?, "force"?}
  HttpResult CreateSession(const Json& request);
  // {"move": node | [nodes], "round"?}
  HttpResult SubmitMove(const std::string& session_id, const Json& request);
  HttpResult GetState(const std::string& session_id) const;
  HttpResult GetSolution(const std::string& graph_spec, int num_cops);

  std::size_t num_sessions() const;
  SolveCache& cache() { return cache_; }

 private:
  struct Session;
  std::shared_ptr<Session> Find(const std::string& id) const;

  PlayServiceOptions options_;
  SolveCache cache_;
  mutable std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mu_;
  std::uint64_t id_state_;
  std::uint64_t id_counter_ = 0;
};

}  // namespace cccr

#endif  // CCCR_PLAY_SERVICE_H_
