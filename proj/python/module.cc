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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbomatch/errors.h"
#include "sbomatch/format.h"
#include "sbomatch/generators.h"
#include "sbomatch/instance.h"
#include "sbomatch/matroid.h"
#include "sbomatch/rational.h"
#include "sbomatch/sbo_lab.h"
#include "sbomatch/solvers.h"

namespace py = pybind11;

namespace sbomatch {
namespace {

py::object ToFraction(const Rational& value) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(ToString(value));
}

// Accepts int, str ("3/2") or fractions.Fraction.
Rational FromPython(const py::handle& value) {
  return ParseRational(py::str(value).cast<std::string>());
}

std::vector<std::pair<int, int>> PairsOf(const std::vector<Pair>& pairs) {
  std::vector<std::pair<int, int>> out;
  for (const Pair& p : pairs) out.emplace_back(p.first, p.second);
  return out;
}

std::vector<Pair> PairsFrom(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Pair> out;
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

py::list Fractions(const std::vector<Weight>& weights) {
  py::list out;
  for (const Weight& w : weights) out.append(ToFraction(w));
  return out;
}

SolverConfig Config(const std::string& algorithm, std::optional<int> s,
                    const py::object& epsilon, bool weighted) {
  const auto alg = ParseAlgorithm(algorithm);
  if (!alg) throw InputError("unknown algorithm '" + algorithm + "'");
  SolverConfig config;
  config.algorithm = *alg;
  config.s = s.value_or(0);
  if (!epsilon.is_none()) config.epsilon = FromPython(epsilon);
  config.weighted = weighted;
  return config;
}

}  // namespace
}  // namespace sbomatch

PYBIND11_MODULE(_sbomatch, m) {
  using namespace sbomatch;
  m.doc() = "Local search for weighted matroid parity on strongly base "
            "orderable matroids, with exhaustive verification tools";

  auto input_error = py::register_exception<InputError>(m, "InputError",
                                                        PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<SizeBoundError>(m, "SizeBoundError",
                                         PyExc_OverflowError);

  py::class_<ParityInstance>(m, "ParityInstance")
      .def_property_readonly("num_pairs", &ParityInstance::num_pairs)
      .def_property_readonly("ground_size",
                             [](const ParityInstance& i) {
                               return i.matroid->ground_size();
                             })
      .def_property_readonly(
          "pairs", [](const ParityInstance& i) { return PairsOf(i.pairs); })
      .def_property_readonly(
          "weights", [](const ParityInstance& i) { return Fractions(i.weights); })
      .def("is_feasible",
           [](const ParityInstance& i, const std::vector<int>& pairs) {
             return IsFeasible(i, pairs);
           })
      .def("serialize",
           [](const ParityInstance& i) { return Serialize(i); });

  py::class_<MatchingInstance>(m, "MatchingInstance")
      .def_property_readonly("num_edges", &MatchingInstance::num_edges)
      .def_property_readonly(
          "edges", [](const MatchingInstance& i) { return PairsOf(i.edges); })
      .def_property_readonly("weights",
                             [](const MatchingInstance& i) {
                               return Fractions(i.weights);
                             })
      .def("is_feasible",
           [](const MatchingInstance& i, const std::vector<int>& edges) {
             return IsFeasibleMatching(i, edges);
           })
      .def("serialize",
           [](const MatchingInstance& i) { return Serialize(i); });

  py::class_<Solution>(m, "Solution")
      .def_readonly("indices", &Solution::indices)
      .def_property_readonly(
          "weight", [](const Solution& s) { return ToFraction(s.weight); })
      .def_readonly("iterations", &Solution::iterations)
      .def_readonly("oracle_calls", &Solution::oracle_calls)
      .def("format",
           [](const Solution& s, const std::string& label) {
             return FormatSolution(s, ResultFormat::kText, label);
           },
           py::arg("label") = "pairs")
      .def("__repr__", [](const Solution& s) {
        return "Solution(indices=" + py::repr(py::cast(s.indices)).cast<std::string>() +
               ", weight=" + ToString(s.weight) + ")";
      });

  m.def("parse_instance",
        [](const std::string& text) -> py::object {
          Instance inst = ParseInstance(text);
          if (auto* p = std::get_if<ParityInstance>(&inst)) {
            return py::cast(std::move(*p));
          }
          return py::cast(std::get<MatchingInstance>(std::move(inst)));
        },
        py::arg("text"), "Parse instance text into a parity or matching instance.");

  m.def("generate_parity",
        [](const std::string& family, int num_pairs, std::uint64_t seed,
           long long wmin, long long wmax) {
          const auto f = ParseFamily(family);
          if (!f) throw InputError("unknown matroid family '" + family + "'");
          return GenerateParity(*f, num_pairs, seed, {wmin, wmax});
        },
        py::arg("family"), py::arg("num_pairs"), py::arg("seed"),
        py::arg("wmin") = 1, py::arg("wmax") = 100);
  m.def("generate_matching",
        [](const std::string& family, int vertices, int edges,
           std::uint64_t seed, long long wmin, long long wmax) {
          const auto f = ParseFamily(family);
          if (!f) throw InputError("unknown matroid family '" + family + "'");
          return GenerateMatching(*f, vertices, edges, seed, {wmin, wmax});
        },
        py::arg("family"), py::arg("vertices"), py::arg("edges"),
        py::arg("seed"), py::arg("wmin") = 1, py::arg("wmax") = 100);
  m.def("clique_instance",
        [](int nu, int pair_count,
           const std::vector<std::pair<int, int>>& edges) {
          return MakeCliqueMatroid(nu, pair_count, PairsFrom(edges)).instance;
        },
        py::arg("nu"), py::arg("pair_count"), py::arg("edges"),
        "Unit-weight parity instance over the clique matroid.");

  m.def("greedy", &Greedy, py::arg("instance"));
  m.def("local_search_unweighted",
        [](const ParityInstance& i, int s, bool allow_weighted) {
          return LocalSearchUnweighted(i, s, {.allow_weighted = allow_weighted});
        },
        py::arg("instance"), py::arg("s"), py::arg("allow_weighted") = false);
  m.def("local_search_weighted",
        [](const ParityInstance& i, int s) { return LocalSearchWeighted(i, s); },
        py::arg("instance"), py::arg("s"));
  m.def("ptas",
        [](const ParityInstance& i, const py::object& eps, bool weighted) {
          return Ptas(i, FromPython(eps), weighted);
        },
        py::arg("instance"), py::arg("epsilon"), py::arg("weighted") = true);
  m.def("ptas_move_size",
        [](const py::object& eps, bool weighted) {
          return PtasMoveSize(FromPython(eps), weighted);
        },
        py::arg("epsilon"), py::arg("weighted") = true);
  m.def("brute_force_opt",
        [](const ParityInstance& i) { return BruteForceOpt(i); },
        py::arg("instance"));
  m.def("best_smove",
        [](const ParityInstance& i, const std::vector<int>& current, int s,
           const py::object& min_gain) -> py::object {
          const auto move = BestSMove(i, current, s, FromPython(min_gain));
          if (!move) return py::none();
          py::dict d;
          d["remove"] = move->remove;
          d["add"] = move->add;
          d["gain"] = ToFraction(move->gain);
          return std::move(d);
        },
        py::arg("instance"), py::arg("current"), py::arg("s"),
        py::arg("min_gain") = 0);
  m.def("solve_matching",
        [](const MatchingInstance& i, const std::string& algorithm,
           std::optional<int> s, const py::object& eps, bool weighted) {
          return SolveMatching(i, Config(algorithm, s, eps, weighted));
        },
        py::arg("instance"), py::arg("algorithm") = "exact",
        py::arg("s") = py::none(), py::arg("epsilon") = py::none(),
        py::arg("weighted") = true);
  m.def("matching_to_parity",
        [](const MatchingInstance& i) {
          ParityReduction r = MatchingToParity(i);
          return py::make_tuple(std::move(r.instance), r.map.edge_of_pair,
                                r.map.vertex_of_copy);
        },
        py::arg("instance"),
        "Returns (parity_instance, edge_of_pair, vertex_of_copy).");

  m.def("check_matroid_axioms",
        [](const ParityInstance& i) {
          const AxiomReport r = CheckMatroidAxioms(*i.matroid);
          py::dict d;
          d["ok"] = r.ok();
          d["violation"] =
              r.violation ? py::cast(ToString(*r.violation)) : py::none();
          d["first"] = r.first;
          d["second"] = r.second;
          return d;
        },
        py::arg("instance"));
  m.def("check_sbo",
        [](const ParityInstance& i) {
          const SboReport r = CheckSbo(*i.matroid);
          py::dict d;
          d["ok"] = r.ok;
          d["rank"] = r.rank;
          d["bases"] = r.num_bases;
          d["pairs_checked"] = r.pairs_checked;
          d["base_i"] = r.base_i;
          d["base_j"] = r.base_j;
          return d;
        },
        py::arg("instance"));
  m.def("max_feasible_matching_size",
        [](const ParityInstance& i) {
          const FeasibleSize r = MaxFeasibleMatchingSize(i);
          return py::make_tuple(r.size, r.witness);
        },
        py::arg("instance"));
  m.def("hidden_oracle_game",
        [](int nu, int pair_count, std::optional<std::vector<int>> secret,
           const std::string& decider, int s) {
          if (decider != "brute" && decider != "local") {
            throw InputError("decider must be 'brute' or 'local'");
          }
          const GameReport r = HiddenOracleGame(
              nu, pair_count, std::move(secret),
              decider == "local" ? GameDecider::kLocalSearch
                                 : GameDecider::kBruteForce,
              s);
          py::dict d;
          d["answer"] = r.answer;
          d["correct"] = r.correct();
          d["witness"] = r.witness;
          d["oracle_calls"] = r.oracle_calls;
          return d;
        },
        py::arg("nu"), py::arg("pair_count"), py::arg("secret") = py::none(),
        py::arg("decider") = "brute", py::arg("s") = 3);
}
