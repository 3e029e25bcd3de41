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

#include "disassoc/breach_audit.h"

#include <algorithm>
#include <utility>

#include "chunk_profile.h"
#include "disassoc/errors.h"

namespace disassoc {

using internal::ChunkProfile;
using internal::EvaluateCover;

namespace {

std::uint64_t PairKey(ItemId a, ItemId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct ClusterAudit {
  ClusterBreach breach;
  std::vector<BreachPair> pairs;
};

ClusterAudit AuditCluster(const Cluster& cluster, std::size_t cluster_index,
                          const KnowledgeIndex& index) {
  ClusterAudit out;
  out.breach.cluster_index = cluster_index;
  out.breach.chunk_breaches.assign(cluster.chunks.size(), 0);

  std::vector<ChunkProfile> profiles;
  profiles.reserve(cluster.chunks.size());
  for (const RecordChunk& c : cluster.chunks) profiles.emplace_back(c);

  for (std::size_t j = 1; j < profiles.size(); ++j) {
    std::size_t breach = 0;
    const ChunkProfile& target = profiles[j];
    for (std::size_t xi = 0; xi < target.chunk->items.size(); ++xi) {
      const ItemId x = target.chunk->items[xi];
      for (std::size_t l = j; l-- > 0;) {
        const auto ev = EvaluateCover(target.supports[xi], profiles[l]);
        if (!ev.split) continue;
        for (ItemId y : ev.split->covered) {
          const auto entry = index.FindPair(x, y);
          if (!entry) continue;
          ++breach;
          out.pairs.push_back({x, y, cluster_index, j, l, ev.split->covering,
                               *entry, ev.candidate_set.size() == 1});
          break;  // one increment per (x, l)
        }
      }
    }
    out.breach.chunk_breaches[j] = breach;
    out.breach.max_breach = std::max(out.breach.max_breach, breach);
  }
  return out;
}

void CheckKnowledge(const DisassociatedDataset& tstar,
                    const BackgroundKnowledge& knowledge) {
  if (knowledge.m != tstar.params.m) {
    throw ParameterError("knowledge itemset size m=" +
                         std::to_string(knowledge.m) +
                         " does not match disassociation m=" +
                         std::to_string(tstar.params.m));
  }
}

AuditReport Assemble(std::vector<ClusterAudit> parts) {
  AuditReport report;
  report.per_cluster.reserve(parts.size());
  for (ClusterAudit& part : parts) {
    report.total_vulnerable_records += part.breach.max_breach;
    report.per_cluster.push_back(std::move(part.breach));
    report.breach_pairs.insert(report.breach_pairs.end(),
                               std::make_move_iterator(part.pairs.begin()),
                               std::make_move_iterator(part.pairs.end()));
  }
  return report;
}

}  // namespace

KnowledgeIndex::KnowledgeIndex(const BackgroundKnowledge& knowledge) {
  for (std::size_t e = 0; e < knowledge.entries.size(); ++e) {
    ForEachCombination(knowledge.entries[e].items.ids(), 2,
                       [&](std::span<const ItemId> pair) {
                         first_entry_.try_emplace(PairKey(pair[0], pair[1]), e);
                       });
  }
}

std::optional<std::size_t> KnowledgeIndex::FindPair(ItemId a, ItemId b) const {
  auto it = first_entry_.find(PairKey(a, b));
  if (it == first_entry_.end()) return std::nullopt;
  return it->second;
}

AuditReport Audit(const DisassociatedDataset& tstar,
                  const BackgroundKnowledge& knowledge) {
  CheckKnowledge(tstar, knowledge);
  const auto start = std::chrono::steady_clock::now();
  const KnowledgeIndex index(knowledge);
  const auto n = static_cast<std::ptrdiff_t>(tstar.clusters.size());
  std::vector<ClusterAudit> parts(tstar.clusters.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    parts[i] = AuditCluster(tstar.clusters[i], static_cast<std::size_t>(i), index);
  }
  AuditReport report = Assemble(std::move(parts));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

AuditReport AuditSerial(const DisassociatedDataset& tstar,
                        const BackgroundKnowledge& knowledge) {
  CheckKnowledge(tstar, knowledge);
  const auto start = std::chrono::steady_clock::now();
  const KnowledgeIndex index(knowledge);
  std::vector<ClusterAudit> parts;
  parts.reserve(tstar.clusters.size());
  for (std::size_t i = 0; i < tstar.clusters.size(); ++i) {
    parts.push_back(AuditCluster(tstar.clusters[i], i, index));
  }
  AuditReport report = Assemble(std::move(parts));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace disassoc
