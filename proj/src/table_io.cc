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

#include "cccr/table_io.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cccr {
namespace {

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double ParseNumber(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return v;
}

Node NodeFromJson(const Graph& g, const Json& j) {
  if (j.is_string()) return g.NodeOf(j.get<std::string>());
  if (j.is_number_integer()) return g.NodeOf(std::to_string(j.get<long long>()));
  throw GraphError("node must be a label string, got " + j.dump());
}

PositionSpace SpaceFor(const Graph& g, const Json& j) {
  return PositionSpace(g.num_nodes(), j.at("cops").get<int>());
}

}  // namespace

std::string FormatValue(double v) {
  if (std::isinf(v)) return "inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v);
  return std::string(buffer, result.ptr);
}

Json ValueToJson(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

double ValueFromJson(const Json& j) {
  if (j.is_string()) return ParseNumber(j.get<std::string>());
  return j.get<double>();
}

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.Edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"nodes", g.labels()}, {"edges", std::move(edges)}};
}

Json PositionToJson(const Graph& g, const ConcurrentPosition& p) {
  Json cops = Json::array();
  for (Node c : p.cops) cops.push_back(g.label(c));
  return {{"cops", std::move(cops)}, {"robber", g.label(p.robber)}};
}

ConcurrentPosition PositionFromJson(const Graph& g, const Json& j) {
  ConcurrentPosition p;
  const Json& cops = j.at("cops");
  if (cops.is_array()) {
    for (const Json& c : cops) p.cops.push_back(NodeFromJson(g, c));
  } else {
    p.cops.push_back(NodeFromJson(g, cops));
  }
  p.robber = NodeFromJson(g, j.at("robber"));
  return p;
}

Json MoveToJson(const Graph& g, const CopMove& move, Side side) {
  if (side == Side::kRobber) return g.label(move.at(0));
  Json out = Json::array();
  for (Node u : move) out.push_back(g.label(u));
  return out;
}

Json ValueTableToJson(const Graph& g, const ValueTable& table) {
  Json values = Json::array();
  for (int i = 0; i < table.space.size(); ++i) {
    Json record = PositionToJson(g, table.space.Decode(i));
    record["value"] = ValueToJson(table.values[i]);
    values.push_back(std::move(record));
  }
  return {{"cops", table.space.num_cops()},
          {"iterations_used", table.iterations_used},
          {"converged", table.converged},
          {"values", std::move(values)}};
}

ValueTable ParseValueTableJson(const Graph& g, const Json& j) {
  ValueTable table;
  table.space = SpaceFor(g, j);
  table.iterations_used = j.at("iterations_used").get<int>();
  table.converged = j.at("converged").get<bool>();
  table.values.assign(table.space.size(), 0.0);
  std::vector<bool> seen(table.space.size(), false);
  for (const Json& record : j.at("values")) {
    const ConcurrentPosition p = PositionFromJson(g, record);
    table.space.Validate(p);
    const int index = table.space.Encode(p);
    table.values[index] = ValueFromJson(record.at("value"));
    seen[index] = true;
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("value table is missing positions");
  }
  return table;
}

Json StrategiesToJson(const Graph& g, const MixedStrategyTable& table) {
  Json records = Json::array();
  for (int i = 0; i < table.space.size(); ++i) {
    for (Side side : {Side::kCop, Side::kRobber}) {
      const auto& entry =
          side == Side::kCop ? table.cop_policy[i] : table.robber_policy[i];
      if (!entry) continue;
      Json record = PositionToJson(g, table.space.Decode(i));
      record["side"] = SideName(side);
      Json support = Json::array();
      for (std::size_t k = 0; k < entry->moves.size(); ++k) {
        support.push_back({{"move", MoveToJson(g, entry->moves[k], side)},
                           {"prob", entry->probs[k]}});
      }
      record["support"] = std::move(support);
      records.push_back(std::move(record));
    }
  }
  return {{"cops", table.space.num_cops()}, {"strategies", std::move(records)}};
}

MixedStrategyTable ParseStrategiesJson(const Graph& g, const Json& j) {
  MixedStrategyTable table;
  table.space = SpaceFor(g, j);
  table.cop_policy.resize(table.space.size());
  table.robber_policy.resize(table.space.size());
  for (const Json& record : j.at("strategies")) {
    const ConcurrentPosition p = PositionFromJson(g, record);
    table.space.Validate(p);
    const Side side = ParseSide(record.at("side").get<std::string>());
    MoveDistribution d;
    for (const Json& item : record.at("support")) {
      const Json& move = item.at("move");
      CopMove m;
      if (move.is_array()) {
        for (const Json& u : move) m.push_back(NodeFromJson(g, u));
      } else {
        m.push_back(NodeFromJson(g, move));
      }
      d.moves.push_back(std::move(m));
      d.probs.push_back(item.at("prob").get<double>());
    }
    const int index = table.space.Encode(p);
    (side == Side::kCop ? table.cop_policy : table.robber_policy)[index] =
        std::move(d);
  }
  return table;
}

std::string ValueTableToCsv(const Graph& g, const ValueTable& table) {
  if (table.space.num_cops() != 1) {
    throw std::invalid_argument("CSV export supports a single cop only");
  }
  const int n = g.num_nodes();
  std::ostringstream out;
  out << "# cops=1 iterations=" << table.iterations_used
      << " converged=" << (table.converged ? "true" : "false") << "\n";
  out << "cop\\robber";
  for (Node y = 0; y < n; ++y) out << ',' << g.label(y);
  out << '\n';
  for (Node x = 0; x < n; ++x) {
    out << g.label(x);
    for (Node y = 0; y < n; ++y) {
      out << ',' << FormatValue(table.values[table.space.Encode({&x, 1}, y)]);
    }
    out << '\n';
  }
  return out.str();
}

ValueTable ParseValueTableCsv(const Graph& g, std::string_view csv) {
  const int n = g.num_nodes();
  ValueTable table;
  table.space = PositionSpace(n, 1);
  table.values.assign(table.space.size(), 0.0);

  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    pos = end + 1;
  }
  std::size_t row = 0;
  if (!lines.empty() && lines[0].starts_with("#")) {
    std::istringstream meta{std::string(lines[0].substr(1))};
    std::string field;
    while (meta >> field) {
      if (field.starts_with("iterations=")) {
        table.iterations_used = std::stoi(field.substr(11));
      } else if (field.starts_with("converged=")) {
        table.converged = field.substr(10) == "true";
      }
    }
    ++row;
  }
  if (lines.size() != row + 1 + n) {
    throw std::invalid_argument("CSV value table needs a header and " +
                                std::to_string(n) + " rows");
  }
  const auto header = SplitCsv(lines[row]);
  if (static_cast<int>(header.size()) != n + 1) {
    throw std::invalid_argument("CSV header has the wrong width");
  }
  std::vector<Node> columns(n);
  for (int k = 0; k < n; ++k) columns[k] = g.NodeOf(header[k + 1]);
  for (int r = 0; r < n; ++r) {
    const auto fields = SplitCsv(lines[row + 1 + r]);
    if (static_cast<int>(fields.size()) != n + 1) {
      throw std::invalid_argument("CSV row has the wrong width");
    }
    const Node x = g.NodeOf(fields[0]);
    for (int k = 0; k < n; ++k) {
      table.values[table.space.Encode({&x, 1}, columns[k])] =
          ParseNumber(fields[k + 1]);
    }
  }
  return table;
}

Json CopwinTableToJson(const CopwinTable& table) {
  const Graph& g = table.graph();
  Json records = Json::array();
  for (int i = 0; i < table.space().size(); ++i) {
    const ConcurrentPosition p = table.space().Decode(i);
    for (Side turn : {Side::kCop, Side::kRobber}) {
      Json record = PositionToJson(g, p);
      record["turn"] = SideName(turn);
      const int rank = table.Rank(i, turn);
      record["rank"] = rank == kInfiniteRank ? Json("inf") : Json(rank);
      records.push_back(std::move(record));
    }
  }
  return records;
}

std::string TraceToJsonLines(const Graph& g, const EpisodeTrace& trace) {
  std::string out;
  for (std::size_t t = 0; t < trace.positions.size(); ++t) {
    Json record = PositionToJson(g, trace.positions[t]);
    const bool captured_here =
        trace.capture_round && static_cast<int>(t) == *trace.capture_round;
    record["round"] = t;
    record["captured"] = captured_here;
    record["en_passant"] = captured_here && trace.en_passant;
    out += record.dump();
    out += '\n';
  }
  return out;
}

}  // namespace cccr
