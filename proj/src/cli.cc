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

#include "cccr/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cccr/concurrent_game.h"
#include "cccr/http_server.h"
#include "cccr/play_service.h"
#include "cccr/simulation.h"
#include "cccr/table_io.h"
#include "cccr/turn_based.h"

namespace cccr {
namespace {

// Malformed arguments detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string file;
  std::string generator;

  void Add(CLI::App* cmd) {
    auto* f = cmd->add_option("--graph", file, "Edge list file");
    auto* g = cmd->add_option("--generator", generator,
                              "path:n, cycle:n, clique:n, paper-tree, gavenciak");
    f->excludes(g);
  }

  Graph Load() const {
    if (file.empty() == generator.empty()) {
      throw UsageError("give exactly one of --graph and --generator");
    }
    if (!generator.empty()) return Generate(generator);
    std::ifstream in(file);
    if (!in) throw GraphError("cannot read '" + file + "'");
    std::stringstream text;
    text << in.rdbuf();
    return ParseEdgeList(text.str());
  }
};

struct SolverFlags {
  int cops = 1;
  double tol = 1e-2;
  int max_iter = 10000;
  int threads = 1;
  bool strict = false;

  void Add(CLI::App* cmd) {
    cmd->add_option("--cops", cops, "Number of cops")->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", tol, "Value iteration tolerance")
        ->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", max_iter, "Sweep limit")
        ->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--threads", threads, "Worker threads")
        ->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", strict, "Exit 3 if value iteration does not converge");
  }

  ValueIterationOptions Options() const {
    ValueIterationOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    options.threads = threads;
    return options;
  }
};

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

ConcurrentPosition ParseStart(const Graph& g, const std::string& text,
                              int num_cops) {
  std::vector<std::string> labels;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) labels.push_back(item);
  if (static_cast<int>(labels.size()) != num_cops + 1) {
    throw UsageError("--start needs " + std::to_string(num_cops) +
                     " cop node(s) and a robber node");
  }
  ConcurrentPosition p;
  for (int i = 0; i <= num_cops; ++i) {
    const auto node = g.Find(labels[i]);
    if (!node) throw UsageError("--start: unknown node '" + labels[i] + "'");
    if (i < num_cops) {
      p.cops.push_back(*node);
    } else {
      p.robber = *node;
    }
  }
  return p;
}

int ConvergenceStatus(const ValueTable& values, const SolverFlags& flags,
                      std::ostream& err) {
  if (values.converged) return kExitOk;
  err << "value iteration did not converge within " << flags.max_iter
      << " sweeps\n";
  return flags.strict ? kExitNotConverged : kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Cops and robbers with simultaneous moves", "cccr");
  app.require_subcommand(1);

  GraphSource source;
  SolverFlags solver;

  auto* solve = app.add_subcommand("solve", "Value table and mixed strategies");
  source.Add(solve);
  solver.Add(solve);
  std::string format = "json";
  std::string output;
  solve->add_option("--format", format)->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--output", output, "Write here instead of stdout");

  auto* cop_number = app.add_subcommand("cop-number", "Turn-based cop number");
  source.Add(cop_number);
  int max_cops = 4;
  cop_number->add_option("--max-cops", max_cops)->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* capture_time = app.add_subcommand(
      "capture-time", "Concurrent and turn-based capture times");
  source.Add(capture_time);
  solver.Add(capture_time);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo episodes");
  source.Add(simulate);
  solver.Add(simulate);
  std::string cop_strategy = "optimal";
  std::string robber_strategy = "optimal";
  std::string start_text;
  int episodes = 1000;
  int horizon = 1000;
  std::uint64_t seed = 0;
  std::string trace_path;
  simulate->add_option("--cop-strategy", cop_strategy)->capture_default_str()
      ->check(CLI::IsMember({"optimal", "guessing", "uniform", "stationary"}));
  simulate->add_option("--robber-strategy", robber_strategy)
      ->capture_default_str()
      ->check(CLI::IsMember({"optimal", "delayed-evasion", "uniform",
                             "stationary"}));
  simulate->add_option("--start", start_text, "Cop nodes then robber, e.g. 2,1")
      ->required();
  simulate->add_option("--episodes", episodes)->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--horizon", horizon)->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed)->capture_default_str();
  simulate->add_option("--trace", trace_path, "JSON lines of the first episode");

  auto* gen = app.add_subcommand("gen", "Print a generator's edge list");
  std::string gen_spec;
  gen->add_option("--generator", gen_spec)->required();

  auto* serve = app.add_subcommand("serve", "Run the HTTP play service");
  ServerOptions server_options;
  server_options.port = DefaultPort();
  serve->add_option("--port", server_options.port)->capture_default_str()
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", server_options.host)->capture_default_str();
  serve->add_option("--static-dir", server_options.static_dir)
      ->check(CLI::ExistingDirectory);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const Graph g = source.Load();
      if (format == "csv" && solver.cops != 1) {
        throw UsageError("--format csv supports --cops 1 only");
      }
      const ConcurrentSolution solution =
          ValueIterate(g, solver.cops, solver.Options());
      std::string text;
      if (format == "csv") {
        text = ValueTableToCsv(g, solution.values);
      } else {
        const Json body = {
            {"graph", GraphToJson(g)},
            {"cops", solver.cops},
            {"capture_time", ValueToJson(CaptureTime(solution.values))},
            {"values", ValueTableToJson(g, solution.values)},
            {"strategies", StrategiesToJson(g, solution.strategies)}};
        text = body.dump(1) + "\n";
      }
      Emit(text, output, out);
      return ConvergenceStatus(solution.values, solver, err);
    }
    if (*cop_number) {
      const Graph g = source.Load();
      if (const auto c = CopNumber(g, max_cops)) {
        out << *c << "\n";
      } else {
        out << "none up to " << max_cops << "\n";
      }
      return kExitOk;
    }
    if (*capture_time) {
      const Graph g = source.Load();
      const ConcurrentSolution solution =
          ValueIterate(g, solver.cops, solver.Options());
      const auto tbcr = TbcrCaptureTime(g, solver.cops);
      out << "concurrent " << FormatValue(CaptureTime(solution.values)) << "\n";
      out << "turn_based " << (tbcr ? std::to_string(*tbcr) : "inf") << "\n";
      return ConvergenceStatus(solution.values, solver, err);
    }
    if (*simulate) {
      const Graph g = source.Load();
      const ConcurrentPosition start = ParseStart(g, start_text, solver.cops);
      std::optional<ConcurrentSolution> solution;
      if (cop_strategy == "optimal" || robber_strategy == "optimal") {
        solution = ValueIterate(g, solver.cops, solver.Options());
      }
      std::optional<CopwinTable> copwin;
      if (cop_strategy == "guessing" || robber_strategy == "delayed-evasion") {
        copwin = SolveCopwin(g, solver.cops);
      }
      std::shared_ptr<const MixedStrategyTable> mixes;
      if (solution) {
        mixes = std::make_shared<const MixedStrategyTable>(solution->strategies);
      }
      const auto make = [&](const std::string& name, Side side) {
        if (name == "optimal") return MixedTableStrategy(mixes, side);
        if (name == "guessing") return GuessingCopStrategy(*copwin);
        if (name == "delayed-evasion") return DelayedEvasionStrategy(*copwin);
        if (name == "uniform") return UniformRandomStrategy(g, side);
        return StationaryStrategy(side);
      };
      const StrategyHandle cop = make(cop_strategy, Side::kCop);
      const StrategyHandle robber = make(robber_strategy, Side::kRobber);
      const ValueEstimate estimate = EstimateValue(
          g, cop, robber, start, episodes, horizon, seed, solver.threads);
      Json summary = {{"start", PositionToJson(g, start)},
                      {"cop_strategy", cop_strategy},
                      {"robber_strategy", robber_strategy},
                      {"episodes", estimate.episodes},
                      {"horizon", horizon},
                      {"seed", seed},
                      {"mean", estimate.mean},
                      {"std_error", estimate.std_error},
                      {"truncated_fraction", estimate.truncated_fraction},
                      {"value", solution ? ValueToJson(solution->values.Value(start))
                                         : Json(nullptr)}};
      out << summary.dump(1) << "\n";
      if (!trace_path.empty()) {
        const EpisodeTrace trace = RunEpisode(g, cop, robber, start, horizon,
                                              Rng::Derive(seed, 0));
        Emit(TraceToJsonLines(g, trace), trace_path, out);
      }
      return solution ? ConvergenceStatus(solution->values, solver, err) : kExitOk;
    }
    if (*gen) {
      out << ToEdgeList(Generate(gen_spec));
      return kExitOk;
    }
    if (*serve) {
      PlayService service;
      HttpServer server(service, server_options);
      const int port = server.Bind();
      err << "listening on " << server_options.host << ":" << port << "\n";
      server.Serve();
      return kExitOk;
    }
  } catch (const GraphError& e) {
    err << "graph error: " << e.what() << "\n";
    return kExitGraph;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cccr
