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

#include "disassoc/anonymizer.h"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "disassoc/errors.h"

namespace disassoc {
namespace {

void CheckParams(std::size_t k, std::size_t m) {
  if (k < 2) throw ParameterError("k must be at least 2");
  if (m < 1) throw ParameterError("m must be at least 1");
}

using CountMap = std::unordered_map<Itemset, std::size_t, ItemsetHash>;

// Cuts `records` into ceil(n / max_size) consecutive pieces whose sizes
// differ by at most one, larger pieces first.
void Chop(std::vector<Record> records, std::size_t max_size,
          std::vector<std::vector<Record>>& out) {
  const std::size_t n = records.size();
  const std::size_t parts = (n + max_size - 1) / max_size;
  const std::size_t base = n / parts;
  const std::size_t extra = n % parts;
  std::size_t pos = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t len = base + (p < extra ? 1 : 0);
    out.emplace_back(std::make_move_iterator(records.begin() + pos),
                     std::make_move_iterator(records.begin() + pos + len));
    pos += len;
  }
}

// Most frequent item not in `used` (smallest id on ties).
std::optional<ItemId> TopItem(const std::vector<Record>& records,
                              const std::vector<ItemId>& used) {
  std::unordered_map<ItemId, std::size_t> freq;
  for (const Record& r : records) {
    for (ItemId id : r.items) ++freq[id];
  }
  std::optional<ItemId> best;
  std::size_t best_count = 0;
  for (const auto& [id, count] : freq) {
    if (std::find(used.begin(), used.end(), id) != used.end()) continue;
    if (!best || count > best_count || (count == best_count && id < *best)) {
      best = id;
      best_count = count;
    }
  }
  return best;
}

// Whether `x` can join a chunk whose current domain is `domain` without any
// itemset of size <= m containing x falling strictly between 0 and k.
bool FitsChunk(ItemId x, const Itemset& domain,
               const std::vector<const Record*>& holders, std::size_t k,
               std::size_t m) {
  if (domain.empty() || m == 1) return true;
  CountMap counts;
  std::vector<ItemId> key;
  for (const Record* r : holders) {
    const Itemset proj = r->items.Intersect(domain);
    const std::size_t max_len = std::min(m - 1, proj.size());
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

std::vector<AnonymityViolation> VerifyKmAnonymous(const RecordChunk& chunk,
                                                  std::size_t k,
                                                  std::size_t m) {
  CheckParams(k, m);
  CountMap counts;
  for (const Itemset& row : chunk.sub_records) {
    const std::size_t max_len = std::min(m, row.size());
    for (std::size_t len = 1; len <= max_len; ++len) {
      ForEachCombination(row.ids(), len, [&](std::span<const ItemId> c) {
        ++counts[Itemset::FromSorted({c.begin(), c.end()})];
      });
    }
  }
  std::vector<AnonymityViolation> out;
  for (const auto& [itemset, support] : counts) {
    if (support < k) out.push_back({itemset, support, k});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return a.offending_itemset < b.offending_itemset;
            });
  return out;
}

std::vector<std::vector<Record>> HorizontalPartition(
    std::span<const Record> records, std::size_t max_cluster_size,
    std::size_t k) {
  if (max_cluster_size < k) {
    throw ParameterError("max cluster size must be at least k");
  }
  std::vector<std::vector<Record>> out;
  if (records.empty()) return out;

  struct Pending {
    std::vector<Record> records;
    std::vector<ItemId> used;
  };
  // LIFO; the "with item" half is pushed last so it is emitted first.
  std::vector<Pending> stack;
  stack.push_back({{records.begin(), records.end()}, {}});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.records.size() <= max_cluster_size) {
      out.push_back(std::move(cur.records));
      continue;
    }
    const std::optional<ItemId> top = TopItem(cur.records, cur.used);
    if (!top) {
      Chop(std::move(cur.records), max_cluster_size, out);
      continue;
    }
    Pending with, without;
    for (Record& r : cur.records) {
      (r.items.Contains(*top) ? with : without).records.push_back(std::move(r));
    }
    with.used = cur.used;
    with.used.push_back(*top);
    without.used = with.used;
    if (!without.records.empty()) stack.push_back(std::move(without));
    stack.push_back(std::move(with));
  }
  return out;
}

Cluster VerticalPartition(std::span<const Record> group, std::size_t k,
                          std::size_t m) {
  CheckParams(k, m);
  Cluster cluster;
  cluster.record_count = group.size();

  std::unordered_map<ItemId, std::vector<const Record*>> holders;
  for (const Record& r : group) {
    for (ItemId id : r.items) holders[id].push_back(&r);
  }

  std::vector<std::pair<ItemId, std::size_t>> frequent;
  std::vector<ItemId> rare;
  for (const auto& [id, list] : holders) {
    if (list.size() >= k) {
      frequent.emplace_back(id, list.size());
    } else {
      rare.push_back(id);
    }
  }
  std::sort(frequent.begin(), frequent.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  cluster.item_chunk.items = Itemset(std::move(rare));

  std::vector<ItemId> remaining;
  remaining.reserve(frequent.size());
  for (const auto& [id, count] : frequent) remaining.push_back(id);

  while (!remaining.empty()) {
    Itemset domain;
    std::vector<ItemId> deferred;
    for (ItemId x : remaining) {
      if (FitsChunk(x, domain, holders.at(x), k, m)) {
        domain = domain.Union(Itemset::FromSorted({x}));
      } else {
        deferred.push_back(x);
      }
    }
    RecordChunk chunk;
    chunk.items = std::move(domain);
    for (const Record& r : group) {
      Itemset proj = r.items.Intersect(chunk.items);
      if (!proj.empty()) chunk.sub_records.push_back(std::move(proj));
    }
    std::sort(chunk.sub_records.begin(), chunk.sub_records.end());
    cluster.chunks.push_back(std::move(chunk));
    remaining = std::move(deferred);
  }
  return cluster;
}

DisassociatedDataset Disassociate(const Dataset& dataset, std::size_t k,
                                  std::size_t m,
                                  std::size_t max_cluster_size) {
  CheckParams(k, m);
  const auto groups = HorizontalPartition(dataset.records, max_cluster_size, k);
  DisassociatedDataset out;
  out.params = {k, m, max_cluster_size};
  out.clusters.resize(groups.size());
  const auto n = static_cast<std::ptrdiff_t>(groups.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out.clusters[i] = VerticalPartition(groups[i], k, m);
  }
  return out;
}

DisassociatedDataset DisassociateSerial(const Dataset& dataset, std::size_t k,
                                        std::size_t m,
                                        std::size_t max_cluster_size) {
  CheckParams(k, m);
  const auto groups = HorizontalPartition(dataset.records, max_cluster_size, k);
  DisassociatedDataset out;
  out.params = {k, m, max_cluster_size};
  out.clusters.reserve(groups.size());
  for (const auto& group : groups) {
    out.clusters.push_back(VerticalPartition(group, k, m));
  }
  return out;
}

std::vector<std::size_t> ChunkItemSupports(const RecordChunk& chunk) {
  std::vector<std::size_t> supports(chunk.items.size(), 0);
  for (const Itemset& row : chunk.sub_records) {
    for (ItemId id : row) {
      auto it = std::lower_bound(chunk.items.begin(), chunk.items.end(), id);
      if (it != chunk.items.end() && *it == id) {
        ++supports[static_cast<std::size_t>(it - chunk.items.begin())];
      }
    }
  }
  return supports;
}

}  // namespace disassoc
