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

#ifndef CCCR_TABLE_IO_H_
#define CCCR_TABLE_IO_H_

// JSON and CSV forms of solver output. Nodes are written as labels; an
// infinite value is written as the string "inf". Doubles use the shortest
// representation that reads back to the same bits, so every Parse* inverts
// its matching export exactly.

#include <string>
#include <string_view>

#include "cccr/concurrent_game.h"
#include "cccr/simulation.h"
#include "cccr/turn_based.h"
#include "json.hpp"

namespace cccr {

using Json = nlohmann::json;

Json ValueToJson(double v);
double ValueFromJson(const Json& j);
std::string FormatValue(double v);

Json GraphToJson(const Graph& g);
Json PositionToJson(const Graph& g, const ConcurrentPosition& p);
ConcurrentPosition PositionFromJson(const Graph& g, const Json& j);
// Robber moves as a bare label, cop moves as an array of labels.
Json MoveToJson(const Graph& g, const CopMove& move, Side side);

// {"cops": K, "iterations_used", "converged",
//  "values": [{"cops": [...], "robber": ..., "value": ...}, ...]}
Json ValueTableToJson(const Graph& g, const ValueTable& table);
ValueTable ParseValueTableJson(const Graph& g, const Json& j);

// {"cops": K, "strategies": [{"cops", "robber", "side",
//   "support": [{"move", "prob"}, ...]}, ...]}. Every legal move is listed,
// including those played with probability 0.
Json StrategiesToJson(const Graph& g, const MixedStrategyTable& table);
MixedStrategyTable ParseStrategiesJson(const Graph& g, const Json& j);

// Single-cop tables only: a "# cops=1 iterations=N converged=B" line, a
// header of robber labels, then one row per cop node. Throws
// std::invalid_argument for more than one cop.
std::string ValueTableToCsv(const Graph& g, const ValueTable& table);
ValueTable ParseValueTableCsv(const Graph& g, std::string_view csv);

// [{"cops", "robber", "turn", "rank"}, ...] over every turn-based position.
Json CopwinTableToJson(const CopwinTable& table);

// One JSON object per line: {"round", "cops", "robber", "captured",
// "en_passant"}.
std::string TraceToJsonLines(const Graph& g, const EpisodeTrace& trace);

}  // namespace cccr

#endif  // CCCR_TABLE_IO_H_
