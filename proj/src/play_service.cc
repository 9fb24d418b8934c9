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

#include "cccr/play_service.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "cccr/simulation.h"
#include "cccr/turn_based.h"

namespace cccr {
namespace {

constexpr std::uint64_t kStartStream = 3;

HttpResult Error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

// Thrown while decoding a request; carries the HTTP status to report.
struct RequestError : std::runtime_error {
  RequestError(int status, const std::string& message)
      : std::runtime_error(message), status(status) {}
  int status;
};

double PositionCount(int num_nodes, int num_cops) {
  return std::pow(static_cast<double>(num_nodes), num_cops + 1);
}

Graph GraphFromRequest(const Json& request) {
  if (request.contains("edge_list")) {
    return ParseEdgeList(request.at("edge_list").get<std::string>());
  }
  if (request.contains("graph")) {
    return Generate(request.at("graph").get<std::string>());
  }
  throw RequestError(400, "request needs \"graph\" or \"edge_list\"");
}

Node NodeFromRequest(const Graph& g, const Json& j) {
  const std::string label =
      j.is_string() ? j.get<std::string>() : std::to_string(j.get<long long>());
  const auto node = g.Find(label);
  if (!node) throw RequestError(422, "unknown node '" + label + "'");
  return *node;
}

std::vector<CopMove> LegalMoves(const Graph& g, const ConcurrentPosition& p,
                                Side side) {
  if (IsCapture(p)) return {};
  if (side == Side::kCop) return CopMoves(g, p);
  std::vector<CopMove> moves;
  for (Node y : RobberMoves(g, p)) moves.push_back({y});
  return moves;
}

Json LegalMovesJson(const Graph& g, const ConcurrentPosition& p, Side side) {
  Json out = Json::array();
  for (const CopMove& m : LegalMoves(g, p, side)) {
    out.push_back(MoveToJson(g, m, side));
  }
  return out;
}

// The engine's mix at p: the solver's strategy, or uniform over legal moves
// where the value is infinite and the solver has none.
MoveDistribution EngineDistribution(const SolvedGame& game, Side engine,
                                    const ConcurrentPosition& p) {
  const int index = game.values.space.Encode(p);
  const auto& policy = engine == Side::kCop ? game.strategies->cop_policy
                                            : game.strategies->robber_policy;
  if (policy[index]) return *policy[index];
  MoveDistribution d;
  d.moves = LegalMoves(game.graph, p, engine);
  d.probs.assign(d.moves.size(), 1.0 / static_cast<double>(d.moves.size()));
  return d;
}

Json MixJson(const Graph& g, const MoveDistribution& d, Side side) {
  Json out = Json::array();
  for (std::size_t k = 0; k < d.moves.size(); ++k) {
    out.push_back({{"move", MoveToJson(g, d.moves[k], side)},
                   {"prob", d.probs[k]}});
  }
  return out;
}

std::string SessionId(std::uint64_t bits) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(bits));
  return buffer;
}

}  // namespace

struct PlayService::Session {
  Session(std::string id, std::shared_ptr<const SolvedGame> game, Side human,
          ConcurrentPosition start, std::uint64_t seed)
      : id(std::move(id)), game(std::move(game)), human(human),
        position(std::move(start)), seed(seed),
        rng(Rng::Derive(seed, human == Side::kRobber ? kCopStream
                                                     : kRobberStream)) {}

  Side engine() const { return Opponent(human); }
  bool captured() const { return capture_round.has_value(); }
  double value() const { return game->values.Value(position); }

  Json Summary() const {
    const Graph& g = game->graph;
    return {{"session_id", id},
            {"cops", game->num_cops},
            {"human_side", SideName(human)},
            {"seed", seed},
            {"round", round},
            {"position", PositionToJson(g, position)},
            {"value_at_position", ValueToJson(value())},
            {"captured", captured()},
            {"en_passant", en_passant},
            {"capture_round",
             capture_round ? Json(*capture_round) : Json(nullptr)},
            {"legal_moves", LegalMovesJson(g, position, human)}};
  }

  const std::string id;
  const std::shared_ptr<const SolvedGame> game;
  const Side human;
  ConcurrentPosition position;
  const std::uint64_t seed;
  Rng rng;
  int round = 0;
  std::optional<int> capture_round;
  bool en_passant = false;
  Json history = Json::array();
  mutable std::mutex mu;
};

std::shared_ptr<const SolvedGame> SolveCache::Get(const Graph& g,
                                                  int num_cops) {
  const Key key{g.Fingerprint(), num_cops};
  std::promise<std::shared_ptr<const SolvedGame>> promise;
  std::shared_future<std::shared_ptr<const SolvedGame>> future;
  bool owner = false;
  {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      auto game = std::make_shared<SolvedGame>(SolvedGame{g, num_cops, {}, {}, {}});
      ConcurrentSolution solution = ValueIterate(g, num_cops, options_);
      game->values = std::move(solution.values);
      game->strategies = std::make_shared<const MixedStrategyTable>(
          std::move(solution.strategies));
      game->cop_number = CopNumber(g, num_cops);
      promise.set_value(std::move(game));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(mu_);
      entries_.erase(key);
    }
  }
  return future.get();
}

std::size_t SolveCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

PlayService::PlayService(PlayServiceOptions options)
    : options_(std::move(options)), cache_(options_.solver),
      id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ std::random_device{}();
}

PlayService::~PlayService() = default;

std::size_t PlayService::num_sessions() const {
  std::shared_lock lock(sessions_mu_);
  return sessions_.size();
}

std::shared_ptr<PlayService::Session> PlayService::Find(
    const std::string& id) const {
  std::shared_lock lock(sessions_mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

HttpResult PlayService::CreateSession(const Json& request) {
  try {
    if (!request.is_object()) throw RequestError(400, "request must be an object");
    const Graph g = GraphFromRequest(request);
    const int num_cops = request.value("cops", 1);
    if (num_cops < 1) throw RequestError(400, "cops must be at least 1");
    if (PositionCount(g.num_nodes(), num_cops) > options_.max_positions) {
      throw RequestError(400, "position space too large for the play service");
    }
    const Side human = ParseSide(request.value("human_side", std::string("R")));
    const bool force = request.value("force", false);
    const std::uint64_t seed = request.contains("seed")
                                   ? request.at("seed").get<std::uint64_t>()
                                   : (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
                                         std::random_device{}();

    auto game = cache_.Get(g, num_cops);
    if (!game->cop_number && !force) {
      throw RequestError(409, std::to_string(num_cops) +
                                  " cop(s) cannot guarantee capture on this graph");
    }

    // Cached games may number nodes differently from this request.
    const Graph& arena = game->graph;
    const PositionSpace& space = game->values.space;
    ConcurrentPosition start;
    const Json start_spec = request.value("start", Json("random"));
    if (start_spec.is_string() && start_spec.get<std::string>() == "random") {
      std::vector<int> candidates;
      for (int i = 0; i < space.size(); ++i) {
        if (space.IsCapture(i)) continue;
        if (!force && std::isinf(game->values.values[i])) continue;
        candidates.push_back(i);
      }
      if (candidates.empty()) throw RequestError(409, "no admissible start position");
      Rng start_rng(Rng::Derive(seed, kStartStream));
      start = space.Decode(
          candidates[start_rng.UniformInt(static_cast<int>(candidates.size()))]);
    } else {
      const Json& cops = start_spec.at("cops");
      if (cops.is_array()) {
        for (const Json& c : cops) start.cops.push_back(NodeFromRequest(arena, c));
      } else {
        start.cops.push_back(NodeFromRequest(arena, cops));
      }
      start.robber = NodeFromRequest(arena, start_spec.at("robber"));
      if (static_cast<int>(start.cops.size()) != num_cops) {
        throw RequestError(400, "start needs one node per cop");
      }
      if (!force && std::isinf(game->values.Value(start))) {
        throw RequestError(409, "start position has infinite value");
      }
    }

    std::string id;
    {
      std::lock_guard lock(id_mu_);
      id = SessionId(Rng::Derive(id_state_, ++id_counter_));
    }
    auto session = std::make_shared<Session>(id, game, human, start, seed);
    if (IsCapture(start)) session->capture_round = 0;
    Json body = session->Summary();
    {
      std::unique_lock lock(sessions_mu_);
      if (static_cast<int>(sessions_.size()) >= options_.max_sessions) {
        return Error(503, "session limit reached");
      }
      if (sessions_.count(id)) return Error(503, "session id collision");
      sessions_.emplace(id, session);
    }
    return {201, std::move(body)};
  } catch (const RequestError& e) {
    return Error(e.status == 422 ? 400 : e.status, e.what());
  } catch (const GraphError& e) {
    return Error(400, e.what());
  } catch (const Json::exception& e) {
    return Error(400, e.what());
  } catch (const std::invalid_argument& e) {
    return Error(400, e.what());
  }
}

HttpResult PlayService::SubmitMove(const std::string& session_id,
                                   const Json& request) {
  auto session = Find(session_id);
  if (!session) return Error(404, "unknown session");
  std::unique_lock lock(session->mu, std::try_to_lock);
  if (!lock.owns_lock()) return Error(409, "a move for this session is in flight");
  if (session->captured()) return Error(409, "game is over");

  const SolvedGame& game = *session->game;
  const Graph& g = game.graph;
  const ConcurrentPosition& p = session->position;
  CopMove human_move;
  try {
    if (!request.is_object()) throw RequestError(400, "request must be an object");
    if (request.contains("round") &&
        request.at("round").get<int>() != session->round) {
      return Error(409, "stale round");
    }
    const Json& move = request.contains("moves") ? request.at("moves")
                                                 : request.at("move");
    if (move.is_array()) {
      for (const Json& u : move) human_move.push_back(NodeFromRequest(g, u));
    } else {
      human_move.push_back(NodeFromRequest(g, move));
    }
  } catch (const RequestError& e) {
    return Error(e.status, e.what());
  } catch (const Json::exception& e) {
    return Error(400, e.what());
  }
  const auto legal = LegalMoves(g, p, session->human);
  if (std::find(legal.begin(), legal.end(), human_move) == legal.end()) {
    return Error(422, "illegal move");
  }

  // The draw sees only the current position.
  const Side engine = session->engine();
  const MoveDistribution mix = EngineDistribution(game, engine, p);
  const CopMove engine_move = mix.moves[session->rng.Sample(mix.probs)];

  const CopMove& cop_move = engine == Side::kCop ? engine_move : human_move;
  const CopMove& robber_move = engine == Side::kCop ? human_move : engine_move;
  const Transition t = CccrTransition(g, p, cop_move, robber_move.at(0));
  session->position = t.next;
  ++session->round;
  if (t.captured) {
    session->capture_round = session->round;
    session->en_passant = t.en_passant;
  }
  Json entry = {{"round", session->round},
                {"cop_move", MoveToJson(g, cop_move, Side::kCop)},
                {"robber_move", MoveToJson(g, robber_move, Side::kRobber)},
                {"position", PositionToJson(g, t.next)},
                {"captured", t.captured},
                {"en_passant", t.en_passant}};
  session->history.push_back(entry);

  Json body = session->Summary();
  body["human_move"] = MoveToJson(g, human_move, session->human);
  body["engine_move"] = MoveToJson(g, engine_move, engine);
  return {200, std::move(body)};
}

HttpResult PlayService::GetState(const std::string& session_id) const {
  auto session = Find(session_id);
  if (!session) return Error(404, "unknown session");
  std::lock_guard lock(session->mu);
  const SolvedGame& game = *session->game;
  const Graph& g = game.graph;
  const ConcurrentPosition& p = session->position;

  Json body = session->Summary();
  body["graph"] = GraphToJson(g);
  body["history"] = session->history;

  Json row = Json::array();
  for (Node y = 0; y < g.num_nodes(); ++y) {
    row.push_back({{"robber", g.label(y)},
                   {"value", ValueToJson(game.values.Value({p.cops, y}))}});
  }
  body["value_row"] = std::move(row);

  Json mix = Json::array();
  Json what_if = Json::array();
  if (!session->captured()) {
    const Side engine = session->engine();
    const MoveDistribution d = EngineDistribution(game, engine, p);
    mix = MixJson(g, d, engine);
    for (const CopMove& h : LegalMoves(g, p, session->human)) {
      Json outcomes = Json::array();
      for (std::size_t k = 0; k < d.moves.size(); ++k) {
        const CopMove& c = engine == Side::kCop ? d.moves[k] : h;
        const CopMove& r = engine == Side::kCop ? h : d.moves[k];
        const Transition t = CccrTransition(g, p, c, r.at(0));
        outcomes.push_back({{"engine_move", MoveToJson(g, d.moves[k], engine)},
                            {"prob", d.probs[k]},
                            {"captured", t.captured},
                            {"value", ValueToJson(game.values.Value(t.next))}});
      }
      what_if.push_back({{"human_move", MoveToJson(g, h, session->human)},
                         {"outcomes", std::move(outcomes)}});
    }
  }
  body["engine_mix"] = std::move(mix);
  body["what_if"] = std::move(what_if);
  return {200, std::move(body)};
}

HttpResult PlayService::GetSolution(const std::string& graph_spec,
                                    int num_cops) {
  try {
    const Graph g = Generate(graph_spec);
    if (num_cops < 1) return Error(400, "cops must be at least 1");
    if (PositionCount(g.num_nodes(), num_cops) > options_.max_positions) {
      return Error(400, "position space too large for the play service");
    }
    auto game = cache_.Get(g, num_cops);
    return {200,
            {{"graph", GraphToJson(g)},
             {"cops", num_cops},
             {"cop_number",
              game->cop_number ? Json(*game->cop_number) : Json(nullptr)},
             {"capture_time", ValueToJson(CaptureTime(game->values))},
             {"values", ValueTableToJson(g, game->values)},
             {"strategies", StrategiesToJson(g, *game->strategies)}}};
  } catch (const GraphError& e) {
    return Error(400, e.what());
  } catch (const std::invalid_argument& e) {
    return Error(400, e.what());
  }
}

}  // namespace cccr
