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

#include "cccr/simulation.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cccr/turn_based.h"

namespace cccr {
namespace {

std::shared_ptr<const MixedStrategyTable> Mixes(const Graph& g, int k = 1) {
  return std::make_shared<const MixedStrategyTable>(ValueIterate(g, k).strategies);
}

TEST(RngTest, DeriveSeparatesStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    for (std::uint64_t stream = 0; stream < 50; ++stream)
      seen.insert(Rng::Derive(seed, stream));
  EXPECT_EQ(seen.size(), 2500u);
  EXPECT_EQ(Rng::Derive(7, 1), Rng::Derive(7, 1));
}

TEST(RngTest, UniformRange) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const int k = rng.UniformInt(7);
    ASSERT_GE(k, 0);
    ASSERT_LT(k, 7);
  }
}

// Pearson chi-square against the requested probabilities; 13.28 is the 1%
// critical value with 4 degrees of freedom.
TEST(RngTest, SampleFollowsProbabilities) {
  const std::vector<double> probs = {0.1, 0.0, 0.4, 0.2, 0.25, 0.05};
  Rng rng(99);
  std::vector<int> counts(probs.size(), 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++counts[rng.Sample(probs)];
  EXPECT_EQ(counts[1], 0);
  double chi2 = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] == 0.0) continue;
    const double expected = draws * probs[k];
    chi2 += (counts[k] - expected) * (counts[k] - expected) / expected;
  }
  EXPECT_LT(chi2, 13.28);
  const std::vector<double> none = {0.0, 0.0};
  EXPECT_THROW(rng.Sample(none), std::invalid_argument);
}

TEST(EpisodeTest, DeterministicUnderSeed) {
  const Graph g = Generate("gavenciak");
  const auto mixes = Mixes(g);
  const auto cop = MixedTableStrategy(mixes, Side::kCop);
  const auto robber = MixedTableStrategy(mixes, Side::kRobber);
  const ConcurrentPosition start{{g.NodeOf("2")}, g.NodeOf("1")};
  const EpisodeTrace a = RunEpisode(g, cop, robber, start, 500, 42);
  const EpisodeTrace b = RunEpisode(g, cop, robber, start, 500, 42);
  EXPECT_EQ(a.positions, b.positions);
  EXPECT_EQ(a.capture_round, b.capture_round);
  ASSERT_TRUE(a.capture_round.has_value());
  EXPECT_EQ(static_cast<int>(a.positions.size()), *a.capture_round + 1);
  EXPECT_TRUE(IsCapture(a.positions.back()));
  for (std::size_t t = 0; t + 1 < a.positions.size(); ++t) {
    EXPECT_FALSE(IsCapture(a.positions[t]));
  }
}

TEST(EpisodeTest, CapturedStartAndTruncation) {
  const Graph g = Generate("path:4");
  const auto cop = StationaryStrategy(Side::kCop);
  const auto robber = StationaryStrategy(Side::kRobber);
  const EpisodeTrace caught = RunEpisode(g, cop, robber, {{1}, 1}, 10, 0);
  EXPECT_EQ(caught.capture_round, 0);
  EXPECT_EQ(TracePayoff(caught), 0);
  const EpisodeTrace cut = RunEpisode(g, cop, robber, {{0}, 3}, 10, 0);
  EXPECT_FALSE(cut.capture_round.has_value());
  EXPECT_EQ(TracePayoff(cut), 11);
  const ValueEstimate e = EstimateValue(g, cop, robber, {{0}, 3}, 20, 10, 0);
  EXPECT_EQ(e.mean, 11.0);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_EQ(e.truncated_fraction, 1.0);
}

TEST(EpisodeTest, ArgumentChecks) {
  const Graph g = Generate("path:4");
  const auto cop = StationaryStrategy(Side::kCop);
  const auto robber = StationaryStrategy(Side::kRobber);
  EXPECT_THROW(RunEpisode(g, robber, cop, {{0}, 3}, 10, 0), std::invalid_argument);
  EXPECT_THROW(RunEpisode(g, cop, robber, {{0}, 3}, 0, 0), std::invalid_argument);
  EXPECT_THROW(RunEpisode(g, cop, robber, {{0}, 9}, 10, 0), GraphError);
  const auto jumper = CustomStrategy(Side::kCop, [](const ConcurrentPosition&, int) {
    return MoveDistribution{{{3}}, {1.0}};
  });
  EXPECT_THROW(RunEpisode(g, jumper, robber, {{0}, 2}, 10, 0), std::logic_error);
}

TEST(EpisodeTest, EstimatesIndependentOfThreads) {
  const Graph g = Generate("gavenciak");
  const auto mixes = Mixes(g);
  const auto cop = MixedTableStrategy(mixes, Side::kCop);
  const auto robber = MixedTableStrategy(mixes, Side::kRobber);
  const ConcurrentPosition start{{g.NodeOf("2")}, g.NodeOf("1")};
  const ValueEstimate one = EstimateValue(g, cop, robber, start, 2000, 1000, 5, 1);
  const ValueEstimate four = EstimateValue(g, cop, robber, start, 2000, 1000, 5, 4);
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.std_error, four.std_error);
  EXPECT_EQ(CaptureRounds(g, cop, robber, start, 300, 1000, 5, 1),
            CaptureRounds(g, cop, robber, start, 300, 1000, 5, 3));
}

// Capture probability 1/2 per round under the optimal mixes on K3, so the
// capture round is geometric with mean 2 and variance 2.
TEST(EpisodeTest, TriangleGeometricCapture) {
  const Graph g = Generate("clique:3");
  const auto mixes = Mixes(g);
  const ValueEstimate e = EstimateValue(
      g, MixedTableStrategy(mixes, Side::kCop),
      MixedTableStrategy(mixes, Side::kRobber), {{2}, 0}, 40000, 1000, 3);
  EXPECT_NEAR(e.mean, 2.0, 4.0 * std::sqrt(2.0 / 40000));
  EXPECT_NEAR(e.std_error, std::sqrt(2.0 / 40000), 1e-3);
}

TEST(EpisodeTest, PathIsDeterministicUnderOptimalPlay) {
  const Graph g = Generate("path:5");
  const auto mixes = Mixes(g);
  const ValueEstimate e = EstimateValue(
      g, MixedTableStrategy(mixes, Side::kCop),
      MixedTableStrategy(mixes, Side::kRobber), {{0}, 4}, 200, 100, 1);
  EXPECT_EQ(e.mean, 4.0);
}

TEST(StrategyFactoryTest, Preconditions) {
  const Graph c4 = Generate("cycle:4");
  EXPECT_THROW(GuessingCopStrategy(SolveCopwin(c4, 1)), std::invalid_argument);
  EXPECT_THROW(DelayedEvasionStrategy(SolveCopwin(Generate("path:4"), 1)),
               std::invalid_argument);
  const auto cop = MixedTableStrategy(Mixes(c4), Side::kCop);
  EXPECT_THROW(cop.Distribution({{0}, 2}, 1), std::invalid_argument);
  EXPECT_EQ(cop.kind(), StrategyHandle::Kind::kMixedTable);
}

TEST(StrategyFactoryTest, GuessingCopMergesGuesses) {
  const Graph g = Generate("path:3");
  const auto cop = GuessingCopStrategy(SolveCopwin(g, 1));
  const MoveDistribution d = cop.Distribution({{0}, 2}, 1);
  double total = 0.0;
  for (double p : d.probs) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
  std::set<CopMove> distinct(d.moves.begin(), d.moves.end());
  EXPECT_EQ(distinct.size(), d.moves.size());
}

// Guessing cop against a random robber on the tree: every episode ends in
// capture, and the survival curve stays under the geometric envelope.
TEST(ProofStrategyTest, GuessingCopSurvivalEnvelope) {
  const Graph g = Generate("paper-tree");
  const CopwinTable table = SolveCopwin(g, 1);
  const int period = table.MaxFiniteRank();
  const int n = g.num_nodes();
  const auto cop = GuessingCopStrategy(table);
  const auto robber = UniformRandomStrategy(g, Side::kRobber);
  const int episodes = 10000;
  const auto rounds =
      CaptureRounds(g, cop, robber, {{g.NodeOf("2")}, g.NodeOf("5")}, episodes, 5000, 8);
  int max_round = 0;
  for (const auto& r : rounds) {
    ASSERT_TRUE(r.has_value());
    max_round = std::max(max_round, *r);
  }
  const double step = 1.0 - std::pow(1.0 / n, period);
  for (int k = 1; k * period <= max_round; ++k) {
    int alive = 0;
    for (const auto& r : rounds) alive += *r > k * period;
    const double envelope = std::pow(step, k);
    const double slack = 3.0 * std::sqrt(envelope * (1 - envelope) / episodes);
    EXPECT_LE(static_cast<double>(alive) / episodes, envelope + slack) << k;
  }
}

// Delayed evasion on C4: explore every cop sequence, merging equal positions.
TEST(ProofStrategyTest, DelayedEvasionNeverCaught) {
  const Graph g = Generate("cycle:4");
  const CopwinTable table = SolveCopwin(g, 1);
  const auto robber = DelayedEvasionStrategy(table);
  const DeterministicStrategy placement = ExtractRobberStrategy(table);
  for (Node x = 0; x < g.num_nodes(); ++x) {
    const Node cops[] = {x};
    std::set<std::vector<Node>> frontier = {{x, *placement.PlacementReply(cops)}};
    for (int round = 1; round <= 50; ++round) {
      std::set<std::vector<Node>> next;
      for (const auto& at : frontier) {
        const ConcurrentPosition p{{at[0]}, at[1]};
        const MoveDistribution d = robber.Distribution(p, round);
        ASSERT_EQ(d.moves.size(), 1u);
        for (Node c : g.ClosedNeighborhood(at[0])) {
          const Node cop_move[] = {c};
          const Transition t = CccrTransition(g, p, cop_move, d.moves[0][0]);
          ASSERT_FALSE(t.captured) << "round " << round;
          ASSERT_FALSE(t.en_passant);
          next.insert({t.next.cops[0], t.next.robber});
        }
      }
      frontier = std::move(next);
    }
  }
}

}  // namespace
}  // namespace cccr
