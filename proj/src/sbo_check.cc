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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitmask.h"
#include "sbomatch/errors.h"
#include "sbomatch/sbo_lab.h"

namespace sbomatch {

namespace {

using internal::Bit;
using internal::Mask;

// Depth-first search for images of sources 0..d-1 among targets 0..d-1. Images
// are tried in ascending order, so the first complete assignment is the
// lexicographically smallest valid one. After fixing source p,
// `last_is_valid(assign, p)` must check every swap set containing p whose
// other members lie below p.
template <typename LastIsValid>
std::optional<std::vector<int>> SearchAssignment(int d,
                                                 LastIsValid&& last_is_valid) {
  std::vector<int> assign(d, -1);
  std::vector<char> used(d, 0);
  std::function<bool(int)> place = [&](int p) {
    if (p == d) return true;
    for (int target = 0; target < d; ++target) {
      if (used[target]) continue;
      assign[p] = target;
      if (last_is_valid(assign, p)) {
        used[target] = 1;
        if (place(p + 1)) return true;
        used[target] = 0;
      }
    }
    assign[p] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return assign;
}

struct BaseSplit {
  ElementSet common;
  ElementSet only_i;
  ElementSet only_j;
};

BaseSplit Split(const ElementSet& i, const ElementSet& j) {
  BaseSplit out;
  std::set_intersection(i.begin(), i.end(), j.begin(), j.end(),
                        std::back_inserter(out.common));
  std::set_difference(i.begin(), i.end(), j.begin(), j.end(),
                      std::back_inserter(out.only_i));
  std::set_difference(j.begin(), j.end(), i.begin(), i.end(),
                      std::back_inserter(out.only_j));
  return out;
}

// (I - K) + pi(K) for K given by `swap` over positions of only_i.
ElementSet SwapSet(const BaseSplit& split, const std::vector<int>& assign,
                   Mask swap) {
  ElementSet out = split.common;
  for (std::size_t q = 0; q < split.only_i.size(); ++q) {
    out.push_back(swap & Bit(static_cast<int>(q))
                      ? split.only_j[assign[q]]
                      : split.only_i[q]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void CheckIsBase(const Matroid& matroid, const ElementSet& set, int rank,
                 const char* name) {
  if (static_cast<int>(set.size()) != rank || !matroid.IsIndependent(set)) {
    throw InputError(std::string(name) + " is not a base");
  }
}

}  // namespace

int ExchangeBijection::Image(int source) const {
  const auto it = std::lower_bound(
      mapping.begin(), mapping.end(), std::make_pair(source, -1));
  if (it == mapping.end() || it->first != source) {
    throw InputError("element " + std::to_string(source) +
                     " is not in the bijection's domain");
  }
  return it->second;
}

std::optional<ExchangeBijection> FindExchangeBijection(
    const Matroid& matroid, std::span<const int> base_i,
    std::span<const int> base_j, int max_rank) {
  const ElementSet i = Normalize(base_i);
  const ElementSet j = Normalize(base_j);
  if (static_cast<int>(i.size()) > max_rank) {
    throw SizeBoundError("bijection search limited to rank " +
                         std::to_string(max_rank));
  }
  const int rank = FullRank(matroid);
  CheckIsBase(matroid, i, rank, "I");
  CheckIsBase(matroid, j, rank, "J");

  const BaseSplit split = Split(i, j);
  const int d = static_cast<int>(split.only_i.size());
  const auto assign =
      SearchAssignment(d, [&](const std::vector<int>& assign, int p) {
        for (Mask lower = 0; lower < Bit(p); ++lower) {
          if (!matroid.IsIndependent(SwapSet(split, assign, lower | Bit(p)))) {
            return false;
          }
        }
        return true;
      });
  if (!assign) return std::nullopt;

  ExchangeBijection out;
  for (int e : split.common) out.mapping.push_back({e, e});
  for (int q = 0; q < d; ++q) {
    out.mapping.push_back({split.only_i[q], split.only_j[(*assign)[q]]});
  }
  std::sort(out.mapping.begin(), out.mapping.end());
  return out;
}

bool IsExchangeBijection(const Matroid& matroid, std::span<const int> base_i,
                         std::span<const int> base_j,
                         const ExchangeBijection& bijection) {
  const ElementSet i = Normalize(base_i);
  const ElementSet j = Normalize(base_j);
  if (i.size() != j.size() || bijection.mapping.size() != i.size() ||
      i.size() >= 63) {
    return false;
  }
  ElementSet images;
  for (int e : i) {
    const auto it = std::lower_bound(bijection.mapping.begin(),
                                     bijection.mapping.end(),
                                     std::make_pair(e, -1));
    if (it == bijection.mapping.end() || it->first != e) return false;
    images.push_back(it->second);
  }
  if (Normalize(images) != j) return false;
  const int rank = static_cast<int>(i.size());
  for (Mask k = 0; k < Bit(rank); ++k) {
    ElementSet swapped;
    for (int q = 0; q < rank; ++q) {
      swapped.push_back(k & Bit(q) ? images[q] : i[q]);
    }
    swapped = Normalize(swapped);
    if (static_cast<int>(swapped.size()) != rank ||
        !matroid.IsIndependent(swapped)) {
      return false;
    }
  }
  return true;
}

SboReport CheckSbo(const Matroid& matroid, int max_rank, int max_ground) {
  const int m = matroid.ground_size();
  if (m > max_ground || m > 26) {
    throw SizeBoundError("SBO check limited to ground sets of " +
                         std::to_string(std::min(max_ground, 26)) +
                         " elements, matroid has " + std::to_string(m));
  }
  SboReport report;
  report.rank = FullRank(matroid);
  const int r = report.rank;
  if (r > max_rank) {
    throw SizeBoundError("SBO check limited to rank " +
                         std::to_string(max_rank) + ", matroid has rank " +
                         std::to_string(r));
  }

  // Enumerate r-subsets in lexicographic order of their element lists.
  std::vector<Mask> bases;
  std::vector<char> is_base(Bit(m), 0);
  {
    std::vector<int> pos(r);
    for (int q = 0; q < r; ++q) pos[q] = q;
    while (true) {
      if (matroid.IsIndependent(pos)) {
        Mask mask = 0;
        for (int e : pos) mask |= Bit(e);
        bases.push_back(mask);
        is_base[mask] = 1;
      }
      int q = r - 1;
      while (q >= 0 && pos[q] == m - r + q) --q;
      if (q < 0) break;
      ++pos[q];
      for (int t = q + 1; t < r; ++t) pos[t] = pos[t - 1] + 1;
    }
  }
  report.num_bases = bases.size();

  std::vector<int> from_bits;
  std::vector<int> to_bits;
  for (std::size_t a = 0; a < bases.size(); ++a) {
    for (std::size_t b = a + 1; b < bases.size(); ++b) {
      ++report.pairs_checked;
      const Mask i = bases[a];
      const Mask j = bases[b];
      from_bits = internal::MaskToSet(i & ~j);
      to_bits = internal::MaskToSet(j & ~i);
      const int d = static_cast<int>(from_bits.size());
      const auto found =
          SearchAssignment(d, [&](const std::vector<int>& assign, int p) {
            for (Mask lower = 0; lower < Bit(p); ++lower) {
              const Mask swap = lower | Bit(p);
              Mask set = i;
              for (int q = 0; q <= p; ++q) {
                if (swap & Bit(q)) {
                  set = (set & ~Bit(from_bits[q])) | Bit(to_bits[assign[q]]);
                }
              }
              if (!is_base[set]) return false;
            }
            return true;
          });
      if (!found) {
        report.ok = false;
        report.base_i = internal::MaskToSet(i);
        report.base_j = internal::MaskToSet(j);
        return report;
      }
    }
  }
  return report;
}

}  // namespace sbomatch
