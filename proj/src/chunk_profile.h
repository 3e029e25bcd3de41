// Copyright 2026 The Disassoc Authors
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

#ifndef DISASSOC_SRC_CHUNK_PROFILE_H_
#define DISASSOC_SRC_CHUNK_PROFILE_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "disassoc/anonymizer.h"
#include "disassoc/cover_detector.h"

namespace disassoc::internal {

// A record chunk with its per-item supports precomputed.
struct ChunkProfile {
  const RecordChunk* chunk = nullptr;
  std::vector<std::size_t> supports;  // parallel to chunk->items

  explicit ChunkProfile(const RecordChunk& c)
      : chunk(&c), supports(ChunkItemSupports(c)) {}

  std::size_t SupportOf(ItemId x) const {
    const auto& items = chunk->items;
    auto it = std::lower_bound(items.begin(), items.end(), x);
    if (it == items.end() || *it != x) return 0;
    return supports[static_cast<std::size_t>(it - items.begin())];
  }

  Itemset ItemsWithSupportAtLeast(std::size_t threshold) const {
    std::vector<ItemId> out;
    for (std::size_t i = 0; i < supports.size(); ++i) {
      if (supports[i] >= threshold) out.push_back(chunk->items[i]);
    }
    return Itemset::FromSorted(std::move(out));
  }
};

// The cover split of `candidate` against `prev`, if it is a cover.
inline std::optional<CoverSplit> SplitIfCover(const Itemset& candidate,
                                              const ChunkProfile& prev) {
  if (candidate.empty()) return std::nullopt;
  std::size_t min_support = SIZE_MAX;
  for (ItemId y : candidate) {
    min_support = std::min(min_support, prev.SupportOf(y));
  }
  if (Support(candidate, prev.chunk->sub_records) != min_support) {
    return std::nullopt;
  }
  std::vector<ItemId> covered, covering;
  for (ItemId y : candidate) {
    (prev.SupportOf(y) == min_support ? covered : covering).push_back(y);
  }
  return CoverSplit{Itemset::FromSorted(std::move(covered)),
                    Itemset::FromSorted(std::move(covering))};
}

struct CoverEvaluation {
  Itemset candidate_set;
  std::optional<CoverSplit> split;
};

// Candidate set of an item with support `x_support` against `prev`, and the
// cover split if the candidate set is a cover.
inline CoverEvaluation EvaluateCover(std::size_t x_support,
                                     const ChunkProfile& prev) {
  CoverEvaluation ev;
  ev.candidate_set = prev.ItemsWithSupportAtLeast(x_support);
  ev.split = SplitIfCover(ev.candidate_set, prev);
  return ev;
}

}  // namespace disassoc::internal

#endif  // DISASSOC_SRC_CHUNK_PROFILE_H_
