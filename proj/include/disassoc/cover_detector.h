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

// Cover problems between record chunks of one cluster.
//
// Given an item x of chunk j and an earlier chunk l, the candidate set is the
// set of chunk-l items whose support in chunk l is at least the support of x
// in chunk j. A cover exists when the candidate set, taken as one itemset,
// is as frequent in chunk l as its least frequent member: every row holding
// that member (the covered item) also holds all the others (the covering
// items). Linking x to the covered item then links x to the covering items.
//
// Every earlier chunk is examined, not only the adjacent one. The item chunk
// never takes part.

#ifndef DISASSOC_COVER_DETECTOR_H_
#define DISASSOC_COVER_DETECTOR_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "disassoc/anonymizer.h"
#include "disassoc/core_model.h"

namespace disassoc {

struct CoverInstance {
  std::size_t cluster_index = 0;
  // 0-based chunk positions within the cluster; prev_chunk < target_chunk.
  std::size_t target_chunk = 0;
  ItemId target_item = 0;
  std::size_t prev_chunk = 0;
  Itemset candidate_set;
  Itemset covered_items;
  Itemset covering_items;

  // A one-item candidate set satisfies the definition trivially; such
  // instances are kept but reported separately.
  bool singleton() const { return candidate_set.size() == 1; }

  friend bool operator==(const CoverInstance&, const CoverInstance&) = default;
};

struct CoverSplit {
  Itemset covered;
  Itemset covering;
};

// Throws ParameterError when x is not in target.items.
Itemset CandidateSet(ItemId x, const RecordChunk& target,
                     const RecordChunk& prev);

// Present iff `candidate` is non-empty and its joint support in `prev`
// equals its smallest member support.
std::optional<CoverSplit> IsCover(const Itemset& candidate,
                                  const RecordChunk& prev);

// Ordered by target chunk, then target item id, then previous chunk from the
// nearest to the first.
std::vector<CoverInstance> DetectCovers(const Cluster& cluster,
                                        std::size_t cluster_index = 0);

// DetectCovers over every cluster, concatenated in cluster order. Clusters
// are processed in parallel; the serial variant is the reference.
std::vector<CoverInstance> DetectAllCovers(const DisassociatedDataset& tstar);
std::vector<CoverInstance> DetectAllCoversSerial(
    const DisassociatedDataset& tstar);

}  // namespace disassoc

#endif  // DISASSOC_COVER_DETECTOR_H_
