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

#include <algorithm>
#include <string>
#include <vector>

#include "bitmask.h"
#include "sbomatch/errors.h"
#include "sbomatch/matroid.h"

namespace sbomatch {

namespace {

// The axiom table is 2^m words; this keeps it below 128 MiB.
constexpr int kHardAxiomGroundLimit = 24;

}  // namespace

std::string ToString(AxiomViolation violation) {
  switch (violation) {
    case AxiomViolation::kEmptySetDependent:
      return "empty set is dependent";
    case AxiomViolation::kNotHereditary:
      return "independent set has a dependent subset";
    case AxiomViolation::kNoExchange:
      return "exchange axiom fails";
  }
  return "unknown";
}

AxiomReport CheckMatroidAxioms(const Matroid& matroid, int max_ground_size) {
  using internal::Bit;
  using internal::Mask;
  using internal::MaskToSet;

  const int m = matroid.ground_size();
  if (m > max_ground_size || m > kHardAxiomGroundLimit) {
    throw SizeBoundError("axiom check limited to " +
                         std::to_string(std::min(max_ground_size,
                                                 kHardAxiomGroundLimit)) +
                         " elements, matroid has " + std::to_string(m));
  }
  const Mask count = Bit(m);
  std::vector<char> independent(count);
  for (Mask t = 0; t < count; ++t) {
    independent[t] = matroid.IsIndependent(MaskToSet(t));
  }

  AxiomReport report;
  if (!independent[0]) {
    report.violation = AxiomViolation::kEmptySetDependent;
    return report;
  }

  // Immediate subsets suffice: heredity then follows by induction.
  for (Mask t = 1; t < count; ++t) {
    if (!independent[t]) continue;
    for (Mask rest = t; rest != 0; rest &= rest - 1) {
      const Mask without = t & ~(rest & -rest);
      if (!independent[without]) {
        report.violation = AxiomViolation::kNotHereditary;
        report.first = MaskToSet(t);
        report.second = MaskToSet(without);
        return report;
      }
    }
  }

  // With heredity established, exchange only needs |B| = |A| + 1.
  std::vector<std::vector<Mask>> by_size(m + 2);
  std::vector<Mask> extensions(count, 0);
  for (Mask t = 0; t < count; ++t) {
    if (!independent[t]) continue;
    by_size[internal::PopCount(t)].push_back(t);
    for (int x = 0; x < m; ++x) {
      if (!(t & Bit(x)) && independent[t | Bit(x)]) extensions[t] |= Bit(x);
    }
  }
  for (Mask a = 0; a < count; ++a) {
    if (!independent[a]) continue;
    for (Mask b : by_size[internal::PopCount(a) + 1]) {
      if ((b & ~a & extensions[a]) == 0) {
        report.violation = AxiomViolation::kNoExchange;
        report.first = MaskToSet(a);
        report.second = MaskToSet(b);
        return report;
      }
    }
  }
  return report;
}

}  // namespace sbomatch
