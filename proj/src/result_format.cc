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

#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sbomatch/sbo_lab.h"
#include "sbomatch/solvers.h"

namespace sbomatch {

namespace {

void WriteIndices(std::ostream& out, std::string_view label,
                  const std::vector<int>& indices) {
  out << label << ':';
  for (int i : indices) out << ' ' << i;
  out << '\n';
}

nlohmann::ordered_json SolutionJson(const Solution& solution,
                                    std::string_view index_label) {
  nlohmann::ordered_json j;
  j[std::string(index_label)] = solution.indices;
  j["weight"] = ToString(solution.weight);
  j["iterations"] = solution.iterations;
  j["oracle_calls"] = solution.oracle_calls;
  return j;
}

}  // namespace

std::string FormatSolution(const Solution& solution, ResultFormat format,
                           std::string_view index_label) {
  if (format == ResultFormat::kJson) {
    return SolutionJson(solution, index_label).dump() + "\n";
  }
  std::ostringstream out;
  WriteIndices(out, index_label, solution.indices);
  out << "weight: " << ToString(solution.weight) << '\n'
      << "iterations: " << solution.iterations << '\n'
      << "oracle_calls: " << solution.oracle_calls << '\n';
  return out.str();
}

std::string FormatGameReport(const GameReport& report, ResultFormat format) {
  Solution as_solution;
  as_solution.indices = report.witness;
  as_solution.weight = static_cast<int>(report.witness.size());
  as_solution.iterations = report.iterations;
  as_solution.oracle_calls = report.oracle_calls;
  if (format == ResultFormat::kJson) {
    nlohmann::ordered_json j;
    j["answer"] = report.answer ? "yes" : "no";
    j["correct"] = report.correct();
    for (auto& [key, value] : SolutionJson(as_solution, "pairs").items()) {
      j[key] = value;
    }
    if (report.secret) {
      j["secret"] = *report.secret;
    } else {
      j["secret"] = "none";
    }
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "answer: " << (report.answer ? "yes" : "no") << '\n'
      << "correct: " << (report.correct() ? "true" : "false") << '\n'
      << FormatSolution(as_solution, ResultFormat::kText, "pairs");
  if (report.secret) {
    WriteIndices(out, "secret", *report.secret);
  } else {
    out << "secret: none\n";
  }
  return out.str();
}

}  // namespace sbomatch
