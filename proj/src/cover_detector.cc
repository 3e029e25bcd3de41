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

#include "disassoc/cover_detector.h"

#include "chunk_profile.h"
#include "disassoc/errors.h"

namespace disassoc {

using internal::ChunkProfile;
using internal::EvaluateCover;

Itemset CandidateSet(ItemId x, const RecordChunk& target,
                     const RecordChunk& prev) {
  if (!target.items.Contains(x)) {
    throw ParameterError("target item is not in the target chunk");
  }
  const std::size_t x_support =
      Support(Itemset::FromSorted({x}), target.sub_records);
  return ChunkProfile(prev).ItemsWithSupportAtLeast(x_support);
}

std::optional<CoverSplit> IsCover(const Itemset& candidate,
                                  const RecordChunk& prev) {
  return internal::SplitIfCover(candidate, ChunkProfile(prev));
}

std::vector<CoverInstance> DetectCovers(const Cluster& cluster,
                                        std::size_t cluster_index) {
  std::vector<CoverInstance> out;
  std::vector<ChunkProfile> profiles;
  profiles.reserve(cluster.chunks.size());
  for (const RecordChunk& c : cluster.chunks) profiles.emplace_back(c);

  for (std::size_t j = 1; j < profiles.size(); ++j) {
    const ChunkProfile& target = profiles[j];
    for (std::size_t xi = 0; xi < target.chunk->items.size(); ++xi) {
      const ItemId x = target.chunk->items[xi];
      for (std::size_t l = j; l-- > 0;) {
        auto ev = EvaluateCover(target.supports[xi], profiles[l]);
        if (!ev.split) continue;
        out.push_back({cluster_index, j, x, l, std::move(ev.candidate_set),
                       std::move(ev.split->covered),
                       std::move(ev.split->covering)});
      }
    }
  }
  return out;
}

std::vector<CoverInstance> DetectAllCovers(const DisassociatedDataset& tstar) {
  const auto n = static_cast<std::ptrdiff_t>(tstar.clusters.size());
  std::vector<std::vector<CoverInstance>> per_cluster(tstar.clusters.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    per_cluster[i] = DetectCovers(tstar.clusters[i], static_cast<std::size_t>(i));
  }
  std::vector<CoverInstance> out;
  for (auto& part : per_cluster) {
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<CoverInstance> DetectAllCoversSerial(
    const DisassociatedDataset& tstar) {
  std::vector<CoverInstance> out;
  for (std::size_t i = 0; i < tstar.clusters.size(); ++i) {
    auto part = DetectCovers(tstar.clusters[i], i);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace disassoc
