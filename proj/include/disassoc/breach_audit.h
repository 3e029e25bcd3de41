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

// Quantitative privacy-breach detection over a disassociated dataset, and a
// desk-scale oracle that enumerates every dataset consistent with a cluster.

#ifndef DISASSOC_BREACH_AUDIT_H_
#define DISASSOC_BREACH_AUDIT_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "disassoc/anonymizer.h"
#include "disassoc/attacker_sim.h"
#include "disassoc/core_model.h"

namespace disassoc {

// Looks up knowledge itemsets by the pairs of items they contain.
class KnowledgeIndex {
 public:
  explicit KnowledgeIndex(const BackgroundKnowledge& knowledge);

  // Index of the first knowledge entry containing both items.
  std::optional<std::size_t> FindPair(ItemId a, ItemId b) const;

 private:
  std::unordered_map<std::uint64_t, std::size_t> first_entry_;
};

struct ClusterBreach {
  std::size_t cluster_index = 0;
  std::size_t max_breach = 0;
  // One count per record chunk; the first chunk is always 0.
  std::vector<std::size_t> chunk_breaches;

  friend bool operator==(const ClusterBreach&, const ClusterBreach&) = default;
};

struct BreachPair {
  ItemId target = 0;
  ItemId covered = 0;
  std::size_t cluster_index = 0;
  std::size_t target_chunk = 0;
  std::size_t prev_chunk = 0;
  Itemset covering;
  // Index into BackgroundKnowledge::entries.
  std::size_t knowledge_entry = 0;
  bool singleton = false;

  friend bool operator==(const BreachPair&, const BreachPair&) = default;
};

struct AuditReport {
  std::size_t total_vulnerable_records = 0;
  std::vector<ClusterBreach> per_cluster;
  // One entry per counted breach, in cluster / chunk / item / chunk order.
  std::vector<BreachPair> breach_pairs;
  std::chrono::duration<double, std::milli> elapsed{0};
};

// For every cluster, chunk j >= 2 and item x of chunk j, every earlier chunk
// l (nearest first) is checked for a cover; when x and one of the covered
// items appear together in a knowledge itemset, chunk j's breach count grows
// by one for that (x, l). A cluster contributes its largest chunk count and
// the total is the sum of contributions.
//
// Clusters are audited in parallel; AuditSerial is the reference. Throws
// ParameterError when knowledge.m differs from tstar.params.m.
AuditReport Audit(const DisassociatedDataset& tstar,
                  const BackgroundKnowledge& knowledge);
AuditReport AuditSerial(const DisassociatedDataset& tstar,
                        const BackgroundKnowledge& knowledge);

// One dataset consistent with a cluster: chunk sub-records aligned row by
// row. Item-chunk items are not placed in any row.
struct Reconstruction {
  std::vector<Itemset> records;
  bool valid = true;

  friend bool operator==(const Reconstruction&, const Reconstruction&) = default;
};

struct ReconstructionOptions {
  std::size_t k = 2;
  // Largest itemset size checked when deciding whether an item could have
  // joined an earlier chunk. Usually m.
  std::size_t merge_check_size = 2;
  std::uint64_t limit = 100000;
};

// Number of distinct alignments: the first chunk's rows stay in place and
// every other chunk, padded with empty rows up to record_count, contributes
// its number of distinct orderings. Saturates at UINT64_MAX.
std::uint64_t CountAlignments(const Cluster& cluster);

// A reconstruction is invalid when some item x of a later chunk could have
// been added to an earlier chunk's domain with every itemset of size <=
// merge_check_size that contains x reaching support 0 or >= k; vertical
// partitioning would have kept x in that chunk.
bool IsConsistentWithPartitioning(const Cluster& cluster,
                                  std::span<const Itemset> records,
                                  std::size_t k, std::size_t merge_check_size);

// All distinct alignments of the cluster, flagged for validity. Throws
// InfeasibleEnumeration when CountAlignments exceeds options.limit.
std::vector<Reconstruction> EnumerateReconstructions(
    const Cluster& cluster, const ReconstructionOptions& options);

struct OracleVerdict {
  // support(itemset) < k in every valid reconstruction.
  bool vulnerable = false;
  // Vulnerable, and every record holding the itemset, in every valid
  // reconstruction, is the same full record.
  bool deanonymized = false;
  // Intersection of all records holding the itemset across valid
  // reconstructions.
  Itemset linked_items;
  std::size_t reconstructions = 0;
  std::size_t valid_reconstructions = 0;
};

OracleVerdict BreachOracle(const Cluster& cluster, const Itemset& itemset,
                           const ReconstructionOptions& options);

}  // namespace disassoc

#endif  // DISASSOC_BREACH_AUDIT_H_
