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

#ifndef SBOMATCH_SRC_BITMASK_H_
#define SBOMATCH_SRC_BITMASK_H_

#include <bit>
#include <cstdint>
#include <vector>

#include "sbomatch/matroid.h"

namespace sbomatch::internal {

using Mask = std::uint64_t;

inline Mask Bit(int i) { return Mask{1} << i; }

inline int PopCount(Mask m) { return std::popcount(m); }

inline ElementSet MaskToSet(Mask m) {
  ElementSet out;
  out.reserve(std::popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask SetToMask(const ElementSet& set) {
  Mask m = 0;
  for (int e : set) m |= Bit(e);
  return m;
}

}  // namespace sbomatch::internal

#endif  // SBOMATCH_SRC_BITMASK_H_
