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

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "disassoc/breach_audit.h"
#include "disassoc/errors.h"

namespace disassoc {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Chunk rows padded with empty rows up to the cluster size, sorted.
std::vector<Itemset> PaddedRows(const RecordChunk& chunk,
                                std::size_t record_count) {
  if (chunk.sub_records.size() > record_count) {
    throw DataError("chunk has more sub-records than the cluster has records");
  }
  std::vector<Itemset> rows = chunk.sub_records;
  rows.resize(record_count);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::uint64_t DistinctOrderings(const std::vector<Itemset>& sorted_rows) {
  std::uint64_t count = 1;
  std::size_t remaining = sorted_rows.size();
  for (std::size_t i = 0; i < sorted_rows.size();) {
    std::size_t j = i;
    while (j < sorted_rows.size() && sorted_rows[j] == sorted_rows[i]) ++j;
    count = SaturatingMul(count, BinomialCoefficient(remaining, j - i));
    remaining -= j - i;
    i = j;
  }
  return count;
}

bool CouldJoin(ItemId x, const Itemset& domain,
               std::span<const Itemset> records, std::size_t k,
               std::size_t merge_check_size) {
  if (merge_check_size <= 1) return true;
  std::unordered_map<Itemset, std::size_t, ItemsetHash> counts;
  std::vector<ItemId> key;
  for (const Itemset& row : records) {
    if (!row.Contains(x)) continue;
    const Itemset proj = row.Intersect(domain);
    const std::size_t max_len = std::min(merge_check_size - 1, proj.size());
    for (std::size_t len = 1; len <= max_len; ++len) {
      ForEachCombination(proj.ids(), len, [&](std::span<const ItemId> c) {
        key.assign(c.begin(), c.end());
        key.insert(std::upper_bound(key.begin(), key.end(), x), x);
        ++counts[Itemset::FromSorted(key)];
      });
    }
  }
  return std::all_of(counts.begin(), counts.end(),
                     [k](const auto& kv) { return kv.second >= k; });
}

}  // namespace

std::uint64_t CountAlignments(const Cluster& cluster) {
  if (!cluster.chunks.empty()) PaddedRows(cluster.chunks[0], cluster.record_count);
  std::uint64_t total = 1;
  for (std::size_t c = 1; c < cluster.chunks.size(); ++c) {
    total = SaturatingMul(
        total, DistinctOrderings(PaddedRows(cluster.chunks[c],
                                            cluster.record_count)));
  }
  return total;
}

bool IsConsistentWithPartitioning(const Cluster& cluster,
                                  std::span<const Itemset> records,
                                  std::size_t k,
                                  std::size_t merge_check_size) {
  for (std::size_t j = 1; j < cluster.chunks.size(); ++j) {
    for (ItemId x : cluster.chunks[j].items) {
      for (std::size_t l = 0; l < j; ++l) {
        if (CouldJoin(x, cluster.chunks[l].items, records, k,
                      merge_check_size)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Reconstruction> EnumerateReconstructions(
    const Cluster& cluster, const ReconstructionOptions& options) {
  const std::uint64_t count = CountAlignments(cluster);
  if (count > options.limit) throw InfeasibleEnumeration(count, options.limit);

  const std::size_t n = cluster.record_count;
  std::vector<std::vector<Itemset>> rows;
  rows.reserve(cluster.chunks.size());
  for (const RecordChunk& chunk : cluster.chunks) {
    rows.push_back(PaddedRows(chunk, n));
  }

  std::vector<Reconstruction> out;
  out.reserve(static_cast<std::size_t>(count));
  // Odometer over chunks 1..t-1; each digit is a lexicographic permutation.
  while (true) {
    Reconstruction rec;
    rec.records.assign(n, Itemset());
    for (const auto& chunk_rows : rows) {
      for (std::size_t r = 0; r < n; ++r) {
        if (!chunk_rows[r].empty()) {
          rec.records[r] = rec.records[r].Union(chunk_rows[r]);
        }
      }
    }
    rec.valid = IsConsistentWithPartitioning(cluster, rec.records, options.k,
                                             options.merge_check_size);
    out.push_back(std::move(rec));

    std::size_t c = rows.size();
    while (c > 1) {
      --c;
      if (std::next_permutation(rows[c].begin(), rows[c].end())) break;
      // Wrapped back to sorted order; carry into the next chunk.
      if (c == 1) return out;
    }
    if (rows.size() <= 1) return out;
  }
}

OracleVerdict BreachOracle(const Cluster& cluster, const Itemset& itemset,
                           const ReconstructionOptions& options) {
  if (itemset.empty()) throw ParameterError("oracle itemset must be non-empty");
  const auto reconstructions = EnumerateReconstructions(cluster, options);

  OracleVerdict verdict;
  verdict.reconstructions = reconstructions.size();
  verdict.vulnerable = true;
  std::set<Itemset> holders;
  std::optional<Itemset> linked;
  for (const Reconstruction& rec : reconstructions) {
    if (!rec.valid) continue;
    ++verdict.valid_reconstructions;
    std::size_t support = 0;
    for (const Itemset& row : rec.records) {
      if (!row.Includes(itemset)) continue;
      ++support;
      holders.insert(row);
      linked = linked ? linked->Intersect(row) : row;
    }
    if (support >= options.k) verdict.vulnerable = false;
  }
  verdict.linked_items = linked.value_or(Itemset());
  verdict.deanonymized = verdict.vulnerable && holders.size() == 1;
  return verdict;
}

}  // namespace disassoc
