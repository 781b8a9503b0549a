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

#ifndef SBOMATCH_FORMAT_H_
#define SBOMATCH_FORMAT_H_

#include <string>
#include <string_view>
#include <variant>

#include "sbomatch/instance.h"
#include "sbomatch/matroid.h"

namespace sbomatch {

// Text instance files. The grammar is documented in docs/FORMAT.md; in short:
//
//   sbomatch-instance v1
//   problem: parity
//   matroid: partition 6
//     block 1: 0 2
//     block 1: 1 4
//   pairs:
//     0 1
//     2 3
//     4 5
//   weights:
//     3
//     2
//     3/2
//
// Combinator kinds (truncate, coloops, copies) nest their inner matroid as an
// indented child line.

inline constexpr std::string_view kFormatMagic = "sbomatch-instance v1";

using Instance = std::variant<ParityInstance, MatchingInstance>;

// Throws ParseError (with a line number) on malformed text and InputError when
// the parsed instance fails validation.
Instance ParseInstance(std::string_view text);
ParityInstance ParseParityInstance(std::string_view text);
MatchingInstance ParseMatchingInstance(std::string_view text);

// Parses a matroid description on its own ("uniform 4 2", or a kind line with
// indented children).
MatroidPtr ParseMatroid(std::string_view text);

// Canonical text: two-space indentation, sets sorted ascending, weights in
// lowest terms. Counting wrappers serialize as the matroid they wrap.
std::string Serialize(const ParityInstance& instance);
std::string Serialize(const MatchingInstance& instance);
std::string Serialize(const Instance& instance);
std::string SerializeMatroid(const Matroid& matroid);

}  // namespace sbomatch

#endif  // SBOMATCH_FORMAT_H_
