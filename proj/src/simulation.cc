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

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace cccr {
namespace {

MoveDistribution Stay(const ConcurrentPosition& p, Side side) {
  return {{side == Side::kCop ? p.cops : CopMove{p.robber}}, {1.0}};
}

bool IsLegal(const Graph& g, const ConcurrentPosition& p, Side side,
             const CopMove& move) {
  if (side == Side::kRobber) {
    return move.size() == 1 && g.Contains(move[0]) &&
           g.InClosedNeighborhood(p.robber, move[0]);
  }
  if (move.size() != p.cops.size()) return false;
  for (std::size_t i = 0; i < move.size(); ++i) {
    if (!g.Contains(move[i]) || !g.InClosedNeighborhood(p.cops[i], move[i])) {
      return false;
    }
  }
  return true;
}

double PairwiseSum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return PairwiseSum(xs.first(half)) + PairwiseSum(xs.subspan(half));
}

template <typename Fn>
void ForEachEpisode(int episodes, int threads, Fn&& fn) {
  threads = std::clamp(threads, 1, std::max(1, episodes));
  if (threads == 1) {
    for (int i = 0; i < episodes; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (int i = w; i < episodes; i += threads) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::uint64_t Rng::Derive(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int Rng::UniformInt(int n) {
  if (n < 1) throw std::invalid_argument("UniformInt needs n >= 1");
  return std::min(n - 1, static_cast<int>(Uniform() * n));
}

int Rng::Sample(std::span<const double> probs) {
  if (probs.empty()) throw std::invalid_argument("empty distribution");
  const double u = Uniform();
  double cumulative = 0.0;
  int last_positive = -1;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = static_cast<int>(i);
    cumulative += probs[i];
    if (u < cumulative) return last_positive;
  }
  if (last_positive < 0) throw std::invalid_argument("distribution has no mass");
  return last_positive;
}

StrategyHandle MixedTableStrategy(
    std::shared_ptr<const MixedStrategyTable> table, Side side) {
  return StrategyHandle(
      StrategyHandle::Kind::kMixedTable, side,
      [table = std::move(table), side](const ConcurrentPosition& p, int) {
        if (IsCapture(p)) return Stay(p, side);
        return QueryStrategy(*table, p, side);
      });
}

StrategyHandle GuessingCopStrategy(const CopwinTable& table) {
  if (!table.AllCopTurnsFinite()) {
    throw std::invalid_argument(
        "guessing cop needs a cop-win table: some cop-turn position has "
        "infinite rank");
  }
  auto sigma = std::make_shared<const DeterministicStrategy>(
      ExtractCopStrategy(table));
  const Graph g = table.graph();
  return StrategyHandle(
      StrategyHandle::Kind::kGuessingCop, Side::kCop,
      [sigma, g](const ConcurrentPosition& p, int) {
        if (IsCapture(p)) return Stay(p, Side::kCop);
        const auto guesses = g.ClosedNeighborhood(p.robber);
        const double weight = 1.0 / static_cast<double>(guesses.size());
        std::map<CopMove, double> merged;
        for (Node guess : guesses) {
          merged[sigma->Move(ConcurrentPosition{p.cops, guess})] += weight;
        }
        MoveDistribution d;
        for (auto& [move, prob] : merged) {
          d.moves.push_back(move);
          d.probs.push_back(prob);
        }
        return d;
      });
}

StrategyHandle DelayedEvasionStrategy(const CopwinTable& table) {
  auto sigma = std::make_shared<const DeterministicStrategy>(
      ExtractRobberStrategy(table));
  return StrategyHandle(
      StrategyHandle::Kind::kDelayedEvasion, Side::kRobber,
      [sigma](const ConcurrentPosition& p, int round) {
        if (IsCapture(p) || round <= 1) return Stay(p, Side::kRobber);
        return MoveDistribution{{sigma->Move(p)}, {1.0}};
      });
}

StrategyHandle UniformRandomStrategy(const Graph& g, Side side) {
  return StrategyHandle(
      StrategyHandle::Kind::kUniformRandom, side,
      [g, side](const ConcurrentPosition& p, int) {
        MoveDistribution d;
        if (side == Side::kCop) {
          d.moves = CopMoves(g, p);
        } else {
          for (Node y : RobberMoves(g, p)) d.moves.push_back(CopMove{y});
        }
        d.probs.assign(d.moves.size(), 1.0 / static_cast<double>(d.moves.size()));
        return d;
      });
}

StrategyHandle StationaryStrategy(Side side) {
  return StrategyHandle(
      StrategyHandle::Kind::kStationary, side,
      [side](const ConcurrentPosition& p, int) { return Stay(p, side); });
}

StrategyHandle CustomStrategy(Side side, StrategyHandle::Policy policy) {
  return StrategyHandle(StrategyHandle::Kind::kCustom, side, std::move(policy));
}

EpisodeTrace RunEpisode(const Graph& g, const StrategyHandle& cop,
                        const StrategyHandle& robber,
                        const ConcurrentPosition& start, int horizon,
                        std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (cop.side() != Side::kCop || robber.side() != Side::kRobber) {
    throw std::invalid_argument("strategy handles passed for the wrong sides");
  }
  PositionSpace(g.num_nodes(), static_cast<int>(start.cops.size()))
      .Validate(start);

  EpisodeTrace trace;
  trace.seed = seed;
  trace.positions.push_back(start);
  if (IsCapture(start)) {
    trace.capture_round = 0;
    return trace;
  }
  Rng cop_rng(Rng::Derive(seed, kCopStream));
  Rng robber_rng(Rng::Derive(seed, kRobberStream));
  for (int round = 1; round <= horizon; ++round) {
    const ConcurrentPosition& current = trace.positions.back();
    const MoveDistribution cop_mix = cop.Distribution(current, round);
    const MoveDistribution robber_mix = robber.Distribution(current, round);
    const CopMove& x = cop_mix.moves[cop_rng.Sample(cop_mix.probs)];
    const CopMove& y = robber_mix.moves[robber_rng.Sample(robber_mix.probs)];
    if (!IsLegal(g, current, Side::kCop, x) ||
        !IsLegal(g, current, Side::kRobber, y)) {
      throw std::logic_error("strategy emitted an illegal move at " +
                             Describe(g, current));
    }
    const Transition t = CccrTransition(g, current, x, y[0]);
    trace.positions.push_back(t.next);
    if (t.captured) {
      trace.capture_round = round;
      trace.en_passant = t.en_passant;
      break;
    }
  }
  return trace;
}

int TracePayoff(const EpisodeTrace& trace) {
  if (trace.capture_round) return *trace.capture_round;
  return static_cast<int>(trace.positions.size());
}

std::vector<std::optional<int>> CaptureRounds(
    const Graph& g, const StrategyHandle& cop, const StrategyHandle& robber,
    const ConcurrentPosition& start, int episodes, int horizon,
    std::uint64_t seed, int threads) {
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  std::vector<std::optional<int>> rounds(episodes);
  ForEachEpisode(episodes, threads, [&](int i) {
    rounds[i] = RunEpisode(g, cop, robber, start, horizon, Rng::Derive(seed, i))
                    .capture_round;
  });
  return rounds;
}

ValueEstimate EstimateValue(const Graph& g, const StrategyHandle& cop,
                            const StrategyHandle& robber,
                            const ConcurrentPosition& start, int episodes,
                            int horizon, std::uint64_t seed, int threads) {
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  std::vector<double> payoffs(episodes);
  std::vector<double> truncated(episodes);
  ForEachEpisode(episodes, threads, [&](int i) {
    const EpisodeTrace trace =
        RunEpisode(g, cop, robber, start, horizon, Rng::Derive(seed, i));
    payoffs[i] = TracePayoff(trace);
    truncated[i] = trace.capture_round ? 0.0 : 1.0;
  });
  ValueEstimate estimate;
  estimate.episodes = episodes;
  estimate.mean = PairwiseSum(payoffs) / episodes;
  estimate.truncated_fraction = PairwiseSum(truncated) / episodes;
  if (episodes > 1) {
    std::vector<double> squares(episodes);
    for (int i = 0; i < episodes; ++i) {
      squares[i] = (payoffs[i] - estimate.mean) * (payoffs[i] - estimate.mean);
    }
    const double variance = PairwiseSum(squares) / (episodes - 1);
    estimate.std_error = std::sqrt(variance / episodes);
  }
  return estimate;
}

}  // namespace cccr
