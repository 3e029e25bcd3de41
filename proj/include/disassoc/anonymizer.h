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

// Disassociation: split a dataset horizontally into clusters of similar
// records, then split every cluster vertically into k^m-anonymous record
// chunks and an item chunk holding the items that occur fewer than k times.

#ifndef DISASSOC_ANONYMIZER_H_
#define DISASSOC_ANONYMIZER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "disassoc/core_model.h"

namespace disassoc {

struct RecordChunk {
  // The chunk's item domain.
  Itemset items;
  // Non-empty projections of the cluster's records onto `items`, with
  // multiplicity, in canonical (sorted) order.
  std::vector<Itemset> sub_records;

  friend bool operator==(const RecordChunk&, const RecordChunk&) = default;
};

struct ItemChunk {
  Itemset items;

  friend bool operator==(const ItemChunk&, const ItemChunk&) = default;
};

struct Cluster {
  std::vector<RecordChunk> chunks;
  ItemChunk item_chunk;
  std::size_t record_count = 0;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

struct DisassociationParams {
  std::size_t k = 3;
  std::size_t m = 2;
  std::size_t max_cluster_size = 0;

  friend bool operator==(const DisassociationParams&,
                         const DisassociationParams&) = default;
};

struct DisassociatedDataset {
  std::vector<Cluster> clusters;
  DisassociationParams params;

  friend bool operator==(const DisassociatedDataset&,
                         const DisassociatedDataset&) = default;
};

struct AnonymityViolation {
  Itemset offending_itemset;
  std::size_t observed_support = 0;
  std::size_t required = 0;

  friend bool operator==(const AnonymityViolation&,
                         const AnonymityViolation&) = default;
};

// Every itemset of size <= m that occurs in some sub-record but in fewer than
// k of them, ordered by itemset. Empty result means the chunk is
// k^m-anonymous. Throws ParameterError unless k >= 2 and m >= 1.
std::vector<AnonymityViolation> VerifyKmAnonymous(const RecordChunk& chunk,
                                                  std::size_t k,
                                                  std::size_t m);

// Recursively splits on the most frequent item of the current record list
// (ties to the smallest id) until every group has at most `max_cluster_size`
// records. Records with that item go first. A group that cannot be split any
// further by item presence is cut into near-equal consecutive pieces.
// Throws ParameterError when max_cluster_size < k.
std::vector<std::vector<Record>> HorizontalPartition(
    std::span<const Record> records, std::size_t max_cluster_size,
    std::size_t k);

// Greedy vertical partitioning of one group. Items with support >= k are
// taken in descending support order (ties to the smallest id) and each is
// added to the chunk under construction if the chunk stays k^m-anonymous,
// otherwise deferred to a later chunk. Items with support < k form the item
// chunk.
Cluster VerticalPartition(std::span<const Record> group, std::size_t k,
                          std::size_t m);

// HorizontalPartition followed by VerticalPartition of each group. The
// groups are partitioned in parallel; the serial variant is the reference.
DisassociatedDataset Disassociate(const Dataset& dataset, std::size_t k,
                                  std::size_t m, std::size_t max_cluster_size);
DisassociatedDataset DisassociateSerial(const Dataset& dataset, std::size_t k,
                                        std::size_t m,
                                        std::size_t max_cluster_size);

// Support of each domain item within the chunk, parallel to chunk.items.
std::vector<std::size_t> ChunkItemSupports(const RecordChunk& chunk);

}  // namespace disassoc

#endif  // DISASSOC_ANONYMIZER_H_
