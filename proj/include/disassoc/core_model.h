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

// Items, itemsets, records and datasets for set-valued data, plus the
// counting primitives every other module is built on.
//
// Items are interned to dense integer ids when a dataset is loaded; all
// counting below works on ids. Labels only matter at I/O boundaries.

#ifndef DISASSOC_CORE_MODEL_H_
#define DISASSOC_CORE_MODEL_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace disassoc {

using ItemId = std::uint32_t;

// A duplicate-free set of item ids kept in ascending order, so that equality
// and ordering are structural.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> ids);
  explicit Itemset(std::vector<ItemId> ids);

  // Skips canonicalization; `ids` must already be strictly ascending.
  static Itemset FromSorted(std::vector<ItemId> ids);

  std::span<const ItemId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  ItemId operator[](std::size_t i) const { return ids_[i]; }

  bool Contains(ItemId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }
  // True iff every member of `other` is a member of this set.
  bool Includes(const Itemset& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(),
                         other.ids_.end());
  }
  bool Includes(std::span<const ItemId> sorted_ids) const {
    return std::includes(ids_.begin(), ids_.end(), sorted_ids.begin(),
                         sorted_ids.end());
  }

  // Members of this set that are also in `domain`.
  Itemset Intersect(const Itemset& domain) const;
  Itemset Union(const Itemset& other) const;
  Itemset Minus(const Itemset& other) const;

  friend auto operator<=>(const Itemset&, const Itemset&) = default;
  friend bool operator==(const Itemset&, const Itemset&) = default;

 private:
  std::vector<ItemId> ids_;
};

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept;
};

struct Record {
  Itemset items;
  // Position in the source dataset; stable identity across partitioning.
  std::size_t ordinal = 0;

  friend bool operator==(const Record&, const Record&) = default;
};

// Bijection between item labels and dense ids.
class Vocabulary {
 public:
  ItemId Intern(std::string_view label);
  std::optional<ItemId> Find(std::string_view label) const;
  const std::string& Label(ItemId id) const { return labels_.at(id); }
  std::size_t size() const { return labels_.size(); }
  std::span<const std::string> labels() const { return labels_; }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ItemId> ids_;
};

struct Dataset {
  std::vector<Record> records;
  Vocabulary vocabulary;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Number of rows that contain `query`. Rows are counted with multiplicity.
std::size_t Support(const Itemset& query, std::span<const Itemset> rows);
std::size_t Support(const Itemset& query, std::span<const Record> records);

// All size-m subsets of `items` in lexicographic order. Throws
// ParameterError for m == 0; returns an empty list when m > |items|.
std::vector<Itemset> MCombinations(const Itemset& items, std::size_t m);
std::vector<Itemset> MCombinations(const Record& record, std::size_t m);

// Singleton supports. Items that never occur are absent from the map.
std::map<ItemId, std::size_t> ItemFrequencies(std::span<const Record> records);
std::map<ItemId, std::size_t> ItemFrequencies(std::span<const Itemset> rows);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t k);

// The combination of rank `rank` (0-based, lexicographic) among the size-m
// subsets of `items`. Requires rank < C(|items|, m).
Itemset UnrankCombination(const Itemset& items, std::size_t m,
                          std::uint64_t rank);

// Calls `fn(std::span<const ItemId>)` once per size-m subset of `items`, in
// lexicographic order. Nothing is called when m == 0 or m > |items|.
template <typename Fn>
void ForEachCombination(std::span<const ItemId> items, std::size_t m, Fn&& fn) {
  const std::size_t n = items.size();
  if (m == 0 || m > n) return;
  std::vector<std::size_t> idx(m);
  std::vector<ItemId> combo(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    for (std::size_t i = 0; i < m; ++i) combo[i] = items[idx[i]];
    fn(std::span<const ItemId>(combo));
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace disassoc

#endif  // DISASSOC_CORE_MODEL_H_
