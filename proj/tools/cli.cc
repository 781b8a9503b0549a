// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbomatch/errors.h"
#include "sbomatch/format.h"
#include "sbomatch/generators.h"
#include "sbomatch/instance.h"
#include "sbomatch/matroid.h"
#include "sbomatch/rational.h"
#include "sbomatch/sbo_lab.h"
#include "sbomatch/solvers.h"

namespace sbomatch::cli {

namespace {

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

std::vector<std::string> SplitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int ToInt(const std::string& token) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used == token.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError("expected an integer, got '" + token + "'");
}

// "0-1,1-2" -> {{0,1},{1,2}}.
std::vector<Pair> ParseGraph(const std::string& text) {
  std::vector<Pair> edges;
  for (const std::string& item : SplitList(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      throw InputError("graph edge '" + item + "' should look like 'a-b'");
    }
    edges.push_back(
        {ToInt(item.substr(0, dash)), ToInt(item.substr(dash + 1))});
  }
  return edges;
}

std::vector<int> ParseIndexList(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : SplitList(text, ',')) {
    out.push_back(ToInt(item));
  }
  return out;
}

ResultFormat ParseFormat(const std::string& name) {
  if (name == "json") return ResultFormat::kJson;
  return ResultFormat::kText;
}

std::string JoinInts(const std::vector<int>& items) {
  std::string out;
  for (int i : items) out += ' ' + std::to_string(i);
  return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  int pairs = 4;
  std::uint64_t seed = 0;
  long long wmin = 1;
  long long wmax = 100;
  bool unit = false;
  int nu = 2;
  std::string graph;
  std::string matroid = "partition";
  int vertices = 4;
  int edges = 4;
  std::string output;
};

int RunGen(const GenArgs& a, std::ostream& out) {
  const WeightRange range =
      a.unit ? WeightRange{1, 1} : WeightRange{a.wmin, a.wmax};
  std::string text;
  if (a.kind == "clique") {
    text = Serialize(MakeCliqueMatroid(a.nu, a.pairs, ParseGraph(a.graph))
                         .instance);
  } else if (a.kind == "matching") {
    const auto family = ParseFamily(a.matroid);
    if (!family) throw InputError("unknown matroid family '" + a.matroid + "'");
    text = Serialize(
        GenerateMatching(*family, a.vertices, a.edges, a.seed, range));
  } else {
    const auto family = ParseFamily(a.kind);
    if (!family) throw InputError("unknown instance kind '" + a.kind + "'");
    text = Serialize(GenerateParity(*family, a.pairs, a.seed, range));
  }
  WriteOutput(a.output, text, out);
  return kExitOk;
}

// -------------------------------------------------------------- solve

struct SolveArgs {
  std::string input;
  std::string algorithm = "exact";
  std::optional<int> s;
  std::optional<std::string> epsilon;
  bool unweighted = false;
  bool allow_weighted = false;
  std::string format = "text";
  int max_exact = 20;
  int max_local = 64;
  std::string output;
};

SolverConfig MakeConfig(const std::string& algorithm, std::optional<int> s,
                        const std::optional<std::string>& epsilon,
                        bool unweighted, bool allow_weighted) {
  const auto alg = ParseAlgorithm(algorithm);
  if (!alg) throw InputError("unknown algorithm '" + algorithm + "'");
  SolverConfig config;
  config.algorithm = *alg;
  const bool local = *alg == Algorithm::kLocal1 || *alg == Algorithm::kLocal2;
  if (local) {
    if (!s || epsilon) throw InputError(algorithm + " needs --s and no --eps");
    config.s = *s;
  } else if (*alg == Algorithm::kPtas) {
    if (!epsilon || s) throw InputError("ptas needs --eps and no --s");
    config.epsilon = ParseRational(*epsilon);
    if (*config.epsilon <= 0 || *config.epsilon >= 1) {
      throw InputError("--eps must lie strictly between 0 and 1");
    }
  } else if (s || epsilon) {
    throw InputError(algorithm + " takes neither --s nor --eps");
  }
  config.weighted = !unweighted;
  config.allow_weighted_local1 = allow_weighted;
  return config;
}

int RunSolve(const SolveArgs& a, std::ostream& out) {
  SolverConfig config =
      MakeConfig(a.algorithm, a.s, a.epsilon, a.unweighted, a.allow_weighted);
  config.limits = {.max_local_pairs = a.max_local,
                   .max_exact_pairs = a.max_exact};
  const Instance instance = ParseInstance(ReadInput(a.input));
  std::string text;
  if (const auto* parity = std::get_if<ParityInstance>(&instance)) {
    text = FormatSolution(Solve(*parity, config), ParseFormat(a.format),
                          "pairs");
  } else {
    text = FormatSolution(
        SolveMatching(std::get<MatchingInstance>(instance), config),
        ParseFormat(a.format), "edges");
  }
  WriteOutput(a.output, text, out);
  return kExitOk;
}

// ------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string input;
  std::string output;
  std::string map_output;
};

int RunReduce(const ReduceArgs& a, std::ostream& out) {
  const ParityReduction reduction =
      MatchingToParity(ParseMatchingInstance(ReadInput(a.input)));
  WriteOutput(a.output, Serialize(reduction.instance), out);
  if (!a.map_output.empty()) {
    std::ostringstream map;
    map << "edge_of_pair:" << JoinInts(reduction.map.edge_of_pair) << '\n'
        << "vertex_of_copy:" << JoinInts(reduction.map.vertex_of_copy) << '\n';
    WriteOutput(a.map_output, map.str(), out);
  }
  return kExitOk;
}

// -------------------------------------------------------------- check

struct CheckArgs {
  std::string kind;
  std::string input;
  int max_ground = kDefaultAxiomGroundBound;
  int max_rank = kDefaultSboRankBound;
  int max_exact = 20;
};

MatroidPtr InstanceMatroid(const Instance& instance) {
  return std::visit([](const auto& i) { return i.matroid; }, instance);
}

int RunCheck(const CheckArgs& a, std::ostream& out) {
  const Instance instance = ParseInstance(ReadInput(a.input));
  std::ostringstream report;
  report << "check: " << a.kind << '\n';
  bool pass = true;
  if (a.kind == "axioms") {
    const AxiomReport r =
        CheckMatroidAxioms(*InstanceMatroid(instance), a.max_ground);
    pass = r.ok();
    report << "result: " << (pass ? "pass" : "fail") << '\n';
    if (!pass) {
      report << "violation: " << ToString(*r.violation) << '\n'
             << "first:" << JoinInts(r.first) << '\n'
             << "second:" << JoinInts(r.second) << '\n';
    }
  } else if (a.kind == "sbo") {
    const SboReport r = CheckSbo(*InstanceMatroid(instance), a.max_rank);
    pass = r.ok;
    report << "result: " << (pass ? "pass" : "fail") << '\n'
           << "rank: " << r.rank << '\n'
           << "bases: " << r.num_bases << '\n'
           << "base_pairs_checked: " << r.pairs_checked << '\n';
    if (!pass) {
      report << "base_i:" << JoinInts(r.base_i) << '\n'
             << "base_j:" << JoinInts(r.base_j) << '\n';
    }
  } else if (a.kind == "reduction") {
    const auto* matching = std::get_if<MatchingInstance>(&instance);
    if (!matching) throw InputError("reduction check needs a matching instance");
    const SolverLimits limits{.max_exact_pairs = a.max_exact};
    const ParityReduction reduction = MatchingToParity(*matching);
    const Solution reduced = BruteForceOpt(reduction.instance, limits);
    const std::vector<int> pulled = PullBack(reduction.map, reduced.indices);
    // Direct optimum over edge subsets of the original instance.
    const MatchingInstance& m = *matching;
    const int n = m.num_edges();
    if (n > limits.max_exact_pairs) {
      throw SizeBoundError("reduction check limited to " +
                           std::to_string(limits.max_exact_pairs) + " edges");
    }
    Weight direct = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> edges;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) edges.push_back(i);
      }
      if (IsFeasibleMatching(m, edges)) {
        direct = std::max(direct, TotalWeight(m, edges));
      }
    }
    const bool pullback_ok = IsFeasibleMatching(m, pulled) &&
                             TotalWeight(m, pulled) == reduced.weight;
    pass = direct == reduced.weight && pullback_ok;
    report << "result: " << (pass ? "pass" : "fail") << '\n'
           << "matching_opt: " << ToString(direct) << '\n'
           << "parity_opt: " << ToString(reduced.weight) << '\n'
           << "pulled_back_edges:" << JoinInts(pulled) << '\n'
           << "pulled_back_feasible: " << (pullback_ok ? "true" : "false")
           << '\n';
  } else {
    throw InputError("unknown check '" + a.kind + "'");
  }
  out << report.str();
  return pass ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------- game

struct GameArgs {
  int nu = 2;
  int pairs = 4;
  std::string secret = "none";
  std::string decider = "brute";
  int s = 3;
  std::string format = "text";
};

int RunGame(const GameArgs& a, std::ostream& out) {
  std::optional<std::vector<int>> secret;
  if (a.secret != "none") secret = ParseIndexList(a.secret);
  GameDecider decider;
  if (a.decider == "brute") {
    decider = GameDecider::kBruteForce;
  } else if (a.decider == "local") {
    decider = GameDecider::kLocalSearch;
  } else {
    throw InputError("decider must be 'brute' or 'local'");
  }
  const GameReport report =
      HiddenOracleGame(a.nu, a.pairs, secret, decider, a.s);
  out << FormatGameReport(report, ParseFormat(a.format));
  return kExitOk;
}

// -------------------------------------------------------------- bench

struct BenchArgs {
  std::string family = "partition";
  int pairs = 6;
  int seeds = 10;
  std::uint64_t seed_base = 0;
  std::string algorithms = "greedy,local2:3,exact";
  long long wmin = 1;
  long long wmax = 100;
  bool unit = false;
  bool allow_weighted = false;
  std::string format = "text";
  int max_exact = 20;
  std::string output;
};

struct BenchAlgorithm {
  std::string label;
  SolverConfig config;
};

std::vector<BenchAlgorithm> ParseBenchAlgorithms(const std::string& text,
                                                 bool allow_weighted) {
  std::vector<BenchAlgorithm> out;
  for (const std::string& item : SplitList(text, ',')) {
    const auto colon = item.find(':');
    std::string name = item.substr(0, colon);
    const std::optional<std::string> param =
        colon == std::string::npos ? std::nullopt
                                   : std::optional(item.substr(colon + 1));
    bool unweighted = false;
    if (name == "ptas-u") {
      name = "ptas";
      unweighted = true;
    }
    std::optional<int> s;
    std::optional<std::string> eps;
    if (name == "local1" || name == "local2") {
      if (param) s = ToInt(*param);
    } else if (name == "ptas") {
      eps = param;
    } else if (param) {
      throw InputError("algorithm '" + name + "' takes no parameter");
    }
    out.push_back(
        {item, MakeConfig(name, s, eps, unweighted, allow_weighted)});
  }
  return out;
}

int RunBench(const BenchArgs& a, std::ostream& out) {
  const auto family = ParseFamily(a.family);
  if (!family) throw InputError("unknown matroid family '" + a.family + "'");
  const WeightRange range =
      a.unit ? WeightRange{1, 1} : WeightRange{a.wmin, a.wmax};
  std::vector<BenchAlgorithm> algorithms =
      ParseBenchAlgorithms(a.algorithms, a.allow_weighted);
  for (auto& alg : algorithms) alg.config.limits.max_exact_pairs = a.max_exact;

  const std::vector<std::string> header = {
      "family", "pairs",  "seed",       "algorithm",   "weight",
      "opt",    "ratio",  "iterations", "oracle_calls"};
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; k < a.seeds; ++k) {
    const std::uint64_t seed = a.seed_base + static_cast<std::uint64_t>(k);
    const ParityInstance instance =
        GenerateParity(*family, a.pairs, seed, range);
    std::optional<Weight> opt;
    if (a.pairs <= a.max_exact) {
      opt = BruteForceOpt(instance, {.max_exact_pairs = a.max_exact}).weight;
    }
    for (const BenchAlgorithm& alg : algorithms) {
      const Solution sol = Solve(instance, alg.config);
      std::string ratio = "-";
      if (opt && *opt > 0) ratio = ToString(Rational(sol.weight / *opt));
      rows.push_back({a.family, std::to_string(a.pairs), std::to_string(seed),
                      alg.label, ToString(sol.weight),
                      opt ? ToString(*opt) : "-", ratio,
                      std::to_string(sol.iterations),
                      std::to_string(sol.oracle_calls)});
    }
  }

  std::ostringstream table;
  if (a.format == "csv") {
    auto write = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        table << (c ? "," : "") << row[c];
      }
      table << '\n';
    };
    write(header);
    for (const auto& row : rows) write(row);
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    auto write = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) line += "  ";
        line += row[c];
        if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
      }
      table << line << '\n';
    };
    write(header);
    for (const auto& row : rows) write(row);
  }
  WriteOutput(a.output, table.str(), out);
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Matroid parity and matroid matching on strongly base "
               "orderable matroids"};
  app.name("sbomatch");
  app.require_subcommand(1);
  std::function<int()> action;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
  gen_cmd->add_option("kind", gen.kind,
                      "partition | transversal | uniform | clique | matching")
      ->required();
  gen_cmd->add_option("--pairs", gen.pairs, "Pair count (clique: |E|)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--wmin", gen.wmin, "Smallest integer weight");
  gen_cmd->add_option("--wmax", gen.wmax, "Largest integer weight");
  gen_cmd->add_flag("--unit", gen.unit, "Unit weights");
  gen_cmd->add_option("--nu", gen.nu, "Clique size (clique)");
  gen_cmd->add_option("--graph", gen.graph,
                      "Graph on pair indices, e.g. 0-1,1-2 (clique)");
  gen_cmd->add_option("--matroid", gen.matroid, "Matroid family (matching)");
  gen_cmd->add_option("--vertices", gen.vertices, "Vertex count (matching)");
  gen_cmd->add_option("--edges", gen.edges, "Edge count (matching)");
  gen_cmd->add_option("-o,--output", gen.output, "Output path");
  gen_cmd->callback([&] { action = [&] { return RunGen(gen, out); }; });

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", solve.input, "Instance path or -")
      ->required();
  solve_cmd->add_option("--alg", solve.algorithm,
                        "greedy | local1 | local2 | ptas | exact");
  solve_cmd->add_option("--s", solve.s, "Move size for local1/local2");
  solve_cmd->add_option("--eps", solve.epsilon, "Accuracy for ptas, e.g. 1/2");
  solve_cmd->add_flag("--unweighted", solve.unweighted,
                      "ptas: use the unweighted local search");
  solve_cmd->add_flag("--allow-weighted", solve.allow_weighted,
                      "local1: accept non-unit weights");
  solve_cmd->add_option("--format", solve.format, "text | json");
  solve_cmd->add_option("--max-exact", solve.max_exact,
                        "Pair bound for the exact solver");
  solve_cmd->add_option("--max-local", solve.max_local,
                        "Pair bound for local search");
  solve_cmd->add_option("-o,--output", solve.output, "Output path");
  solve_cmd->callback([&] { action = [&] { return RunSolve(solve, out); }; });

  ReduceArgs reduce;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Reduce a matching instance to parity");
  reduce_cmd->add_option("instance", reduce.input, "Matching instance path")
      ->required();
  reduce_cmd->add_option("-o,--output", reduce.output, "Output path");
  reduce_cmd->add_option("--map", reduce.map_output,
                         "Where to write the reduction map");
  reduce_cmd->callback(
      [&] { action = [&] { return RunReduce(reduce, out); }; });

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run a verification check");
  check_cmd->add_option("kind", check.kind, "axioms | sbo | reduction")
      ->required();
  check_cmd->add_option("instance", check.input, "Instance path")->required();
  check_cmd->add_option("--max-ground", check.max_ground,
                        "Ground-set bound for the axiom check");
  check_cmd->add_option("--max-rank", check.max_rank,
                        "Rank bound for the SBO check");
  check_cmd->add_option("--max-exact", check.max_exact,
                        "Edge bound for the reduction check");
  check_cmd->callback([&] { action = [&] { return RunCheck(check, out); }; });

  GameArgs game;
  auto* game_cmd =
      app.add_subcommand("game", "Decide feasibility against a hidden oracle");
  game_cmd->add_option("--nu", game.nu, "Target matching size");
  game_cmd->add_option("--pairs", game.pairs, "Pair count");
  game_cmd->add_option("--secret", game.secret,
                       "Hidden pair set, e.g. 0,2, or none");
  game_cmd->add_option("--decider", game.decider, "brute | local");
  game_cmd->add_option("--s", game.s, "Move size for the local decider");
  game_cmd->add_option("--format", game.format, "text | json");
  game_cmd->callback([&] { action = [&] { return RunGame(game, out); }; });

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Tabulate solvers over generated instances");
  bench_cmd->add_option("--family", bench.family,
                        "partition | transversal | uniform");
  bench_cmd->add_option("--pairs", bench.pairs, "Pairs per instance");
  bench_cmd->add_option("--seeds", bench.seeds, "Number of instances");
  bench_cmd->add_option("--seed-base", bench.seed_base, "First seed");
  bench_cmd->add_option("--algs", bench.algorithms,
                        "Comma list: greedy, exact, local1:S, local2:S, "
                        "ptas:EPS, ptas-u:EPS");
  bench_cmd->add_option("--wmin", bench.wmin, "Smallest integer weight");
  bench_cmd->add_option("--wmax", bench.wmax, "Largest integer weight");
  bench_cmd->add_flag("--unit", bench.unit, "Unit weights");
  bench_cmd->add_flag("--allow-weighted", bench.allow_weighted,
                      "local1: accept non-unit weights");
  bench_cmd->add_option("--format", bench.format, "text | csv");
  bench_cmd->add_option("--max-exact", bench.max_exact,
                        "Pair bound for the exact reference");
  bench_cmd->add_option("-o,--output", bench.output, "Output path");
  bench_cmd->callback([&] { action = [&] { return RunBench(bench, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const SizeBoundError& e) {
    err << "sbomatch: " << e.what() << '\n';
    return kExitSizeBound;
  } catch (const InputError& e) {
    err << "sbomatch: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "sbomatch: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace sbomatch::cli
