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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace cccr {
namespace {

TEST(TableIoTest, FormatValue) {
  EXPECT_EQ(FormatValue(0.1), "0.1");
  EXPECT_EQ(FormatValue(2.0), "2");
  EXPECT_EQ(FormatValue(1.9921875), "1.9921875");
  EXPECT_EQ(FormatValue(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(ValueToJson(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_TRUE(std::isinf(ValueFromJson("inf")));
  EXPECT_EQ(ValueFromJson(Json(2.5)), 2.5);
}

TEST(TableIoTest, ValueTableJsonRoundTrip) {
  for (const auto& [spec, k] : std::vector<std::pair<std::string, int>>{
           {"gavenciak", 1}, {"cycle:4", 1}, {"cycle:5", 2}, {"clique:3", 1}}) {
    const Graph g = Generate(spec);
    const ConcurrentSolution s = ValueIterate(g, k);
    const Json j = ValueTableToJson(g, s.values);
    // Through text as well, as a client would see it.
    const ValueTable back = ParseValueTableJson(g, Json::parse(j.dump()));
    EXPECT_EQ(back, s.values) << spec;
  }
}

TEST(TableIoTest, StrategiesJsonRoundTrip) {
  for (const auto& [spec, k] : std::vector<std::pair<std::string, int>>{
           {"gavenciak", 1}, {"cycle:4", 1}, {"path:4", 2}}) {
    const Graph g = Generate(spec);
    const ConcurrentSolution s = ValueIterate(g, k);
    const Json j = StrategiesToJson(g, s.strategies);
    EXPECT_EQ(ParseStrategiesJson(g, Json::parse(j.dump())), s.strategies) << spec;
  }
}

TEST(TableIoTest, CsvRoundTrip) {
  for (const char* spec : {"gavenciak", "cycle:4", "path:5", "clique:3"}) {
    const Graph g = Generate(spec);
    const ValueTable v = ValueIterate(g).values;
    EXPECT_EQ(ParseValueTableCsv(g, ValueTableToCsv(g, v)), v) << spec;
  }
}

TEST(TableIoTest, CsvLayout) {
  const Graph g = Generate("path:5");
  const std::string csv = ValueTableToCsv(g, ValueIterate(g).values);
  std::istringstream in(csv);
  std::string meta, header, first;
  std::getline(in, meta);
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(meta.rfind("# cops=1", 0), 0u);
  EXPECT_EQ(header, "cop\\robber,1,2,3,4,5");
  EXPECT_EQ(first, "1,0,4,4,4,4");
}

TEST(TableIoTest, CsvErrors) {
  const Graph g = Generate("path:3");
  EXPECT_THROW(ValueTableToCsv(g, ValueIterate(g, 2).values), std::invalid_argument);
  EXPECT_THROW(ParseValueTableCsv(g, "cop\\robber,1,2,3\n1,0,1,1\n"),
               std::invalid_argument);
  EXPECT_THROW(ParseValueTableCsv(g, "cop\\robber,1,2,3\n1,0,1\n2,1,0,1\n3,1,1,0\n"),
               std::invalid_argument);
  EXPECT_THROW(ParseValueTableCsv(g, "cop\\robber,1,2,3\n1,0,x,1\n2,1,0,1\n3,1,1,0\n"),
               std::invalid_argument);
  EXPECT_THROW(ParseValueTableCsv(g, "cop\\robber,1,2,9\n1,0,1,1\n2,1,0,1\n3,1,1,0\n"),
               GraphError);
}

TEST(TableIoTest, JsonErrors) {
  const Graph g = Generate("path:3");
  Json j = ValueTableToJson(g, ValueIterate(g).values);
  j["values"].erase(0);
  EXPECT_THROW(ParseValueTableJson(g, j), std::invalid_argument);
  Json bad = ValueTableToJson(g, ValueIterate(g).values);
  bad["values"][0]["robber"] = "7";
  EXPECT_THROW(ParseValueTableJson(g, bad), GraphError);
}

TEST(TableIoTest, PositionsUseLabels) {
  const Graph g = ParseEdgeList("a b\nb c\n");
  const Json j = PositionToJson(g, {{0, 2}, 1});
  EXPECT_EQ(j, Json::parse(R"({"cops":["a","c"],"robber":"b"})"));
  EXPECT_EQ(PositionFromJson(g, j), (ConcurrentPosition{{0, 2}, 1}));
  EXPECT_EQ(MoveToJson(g, {1}, Side::kRobber), "b");
  EXPECT_EQ(MoveToJson(g, {1}, Side::kCop), Json::array({"b"}));
}

TEST(TableIoTest, CopwinJson) {
  const Graph g = Generate("cycle:4");
  const Json j = CopwinTableToJson(SolveCopwin(g, 1));
  ASSERT_EQ(j.size(), 32u);
  int infinite = 0;
  for (const Json& r : j) infinite += r.at("rank") == "inf";
  EXPECT_GT(infinite, 0);
  EXPECT_EQ(j[0].at("turn"), "C");
  EXPECT_EQ(j[0].at("rank"), 0);
}

TEST(TableIoTest, TraceLines) {
  const Graph g = Generate("path:2");
  EpisodeTrace trace;
  trace.positions = {{{0}, 1}, {{0}, 0}};
  trace.capture_round = 1;
  trace.en_passant = true;
  const std::string lines = TraceToJsonLines(g, trace);
  std::istringstream in(lines);
  std::string a, b;
  std::getline(in, a);
  std::getline(in, b);
  EXPECT_EQ(Json::parse(a).at("captured"), false);
  EXPECT_EQ(Json::parse(b).at("round"), 1);
  EXPECT_EQ(Json::parse(b).at("en_passant"), true);
}

}  // namespace
}  // namespace cccr
