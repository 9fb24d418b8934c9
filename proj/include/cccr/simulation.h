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

#ifndef CCCR_SIMULATION_H_
#define CCCR_SIMULATION_H_

// Seeded Monte Carlo play of the simultaneous game.
//
// Randomness: every episode owns a seed; the cop and the robber draw from
// separate mt19937_64 streams whose seeds are SplitMix64 mixes of the
// episode seed and a per-side stream id. Neither side's draw can influence
// the other's.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cccr/concurrent_game.h"
#include "cccr/graph.h"
#include "cccr/position.h"
#include "cccr/turn_based.h"

namespace cccr {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // SplitMix64 finalizer over (seed, stream): independent child seeds.
  static std::uint64_t Derive(std::uint64_t seed, std::uint64_t stream);

  // Uniform on [0, 1) from the top 53 bits of one draw.
  double Uniform();
  // Uniform on {0, ..., n - 1}.
  int UniformInt(int n);
  // Index drawn from `probs` by inverse CDF.
  int Sample(std::span<const double> probs);

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kCopStream = 1;
inline constexpr std::uint64_t kRobberStream = 2;

// A side's memoryless policy. `round` is the index of the round about to be
// played (1 for the first move) for the few strategies that need it.
class StrategyHandle {
 public:
  enum class Kind {
    kMixedTable,
    kGuessingCop,
    kDelayedEvasion,
    kUniformRandom,
    kStationary,
    kCustom,
  };
  using Policy =
      std::function<MoveDistribution(const ConcurrentPosition&, int round)>;

  StrategyHandle(Kind kind, Side side, Policy policy)
      : kind_(kind), side_(side), policy_(std::move(policy)) {}

  Kind kind() const { return kind_; }
  Side side() const { return side_; }
  MoveDistribution Distribution(const ConcurrentPosition& p, int round) const {
    return policy_(p, round);
  }

 private:
  Kind kind_;
  Side side_;
  Policy policy_;
};

// Plays the solver's mixes. Falls back to "stay" on captured positions;
// throws std::invalid_argument at infinite-value positions.
StrategyHandle MixedTableStrategy(
    std::shared_ptr<const MixedStrategyTable> table, Side side);

// Cop strategy built from a winning turn-based cop strategy: guess the
// robber's next node uniformly from its closed neighbourhood and answer as
// the turn-based cop would if the robber stood there. Throws
// std::invalid_argument unless every cop-turn position of `table` has
// finite rank.
StrategyHandle GuessingCopStrategy(const CopwinTable& table);

// Robber strategy from a winning turn-based robber strategy: stay put in
// round 1, afterwards answer the current position as the turn-based robber
// would on its turn. Throws std::invalid_argument if the table has no
// evasion region; at a position outside it the policy throws.
StrategyHandle DelayedEvasionStrategy(const CopwinTable& table);

// Uniform over legal moves (joint moves for the cops).
StrategyHandle UniformRandomStrategy(const Graph& g, Side side);

// Never moves.
StrategyHandle StationaryStrategy(Side side);

StrategyHandle CustomStrategy(Side side, StrategyHandle::Policy policy);

struct EpisodeTrace {
  std::vector<ConcurrentPosition> positions;  // positions[t] after round t
  std::optional<int> capture_round;
  bool en_passant = false;
  std::uint64_t seed = 0;
};

// Plays at most `horizon` rounds from `start`, stopping at capture. Both
// sides sample against the current position before the transition. Throws
// std::logic_error if a strategy emits an illegal move.
EpisodeTrace RunEpisode(const Graph& g, const StrategyHandle& cop,
                        const StrategyHandle& robber,
                        const ConcurrentPosition& start, int horizon,
                        std::uint64_t seed);

// Sum of stage payoffs along a trace: the capture round, or horizon + 1 for
// an episode cut off uncaught.
int TracePayoff(const EpisodeTrace& trace);

struct ValueEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double truncated_fraction = 0.0;
  int episodes = 0;
};

// Monte Carlo mean of TracePayoff. Episode i uses seed Rng::Derive(seed, i);
// results are independent of `threads`.
ValueEstimate EstimateValue(const Graph& g, const StrategyHandle& cop,
                            const StrategyHandle& robber,
                            const ConcurrentPosition& start, int episodes,
                            int horizon, std::uint64_t seed, int threads = 1);

// Capture round of every episode (nullopt when cut off), same seeding as
// EstimateValue.
std::vector<std::optional<int>> CaptureRounds(
    const Graph& g, const StrategyHandle& cop, const StrategyHandle& robber,
    const ConcurrentPosition& start, int episodes, int horizon,
    std::uint64_t seed, int threads = 1);

}  // namespace cccr

#endif  // CCCR_SIMULATION_H_
