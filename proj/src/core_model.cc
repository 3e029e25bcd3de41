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

#include "disassoc/core_model.h"

#include <limits>
#include <utility>

#include "disassoc/errors.h"

namespace disassoc {

Itemset::Itemset(std::initializer_list<ItemId> ids)
    : Itemset(std::vector<ItemId>(ids)) {}

Itemset::Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

Itemset Itemset::FromSorted(std::vector<ItemId> ids) {
  Itemset s;
  s.ids_ = std::move(ids);
  return s;
}

Itemset Itemset::Intersect(const Itemset& domain) const {
  std::vector<ItemId> out;
  std::set_intersection(ids_.begin(), ids_.end(), domain.ids_.begin(),
                        domain.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

Itemset Itemset::Union(const Itemset& other) const {
  std::vector<ItemId> out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

Itemset Itemset::Minus(const Itemset& other) const {
  std::vector<ItemId> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  return FromSorted(std::move(out));
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
  // FNV-1a over the ids.
  std::uint64_t h = 1469598103934665603ull;
  for (ItemId id : s) {
    h ^= id;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

ItemId Vocabulary::Intern(std::string_view label) {
  std::string key(label);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  auto id = static_cast<ItemId>(labels_.size());
  labels_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<ItemId> Vocabulary::Find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t Support(const Itemset& query, std::span<const Itemset> rows) {
  std::size_t count = 0;
  for (const Itemset& row : rows) {
    if (row.Includes(query)) ++count;
  }
  return count;
}

std::size_t Support(const Itemset& query, std::span<const Record> records) {
  std::size_t count = 0;
  for (const Record& r : records) {
    if (r.items.Includes(query)) ++count;
  }
  return count;
}

std::vector<Itemset> MCombinations(const Itemset& items, std::size_t m) {
  if (m == 0) throw ParameterError("m must be at least 1");
  std::vector<Itemset> out;
  ForEachCombination(items.ids(), m, [&](std::span<const ItemId> c) {
    out.push_back(Itemset::FromSorted({c.begin(), c.end()}));
  });
  return out;
}

std::vector<Itemset> MCombinations(const Record& record, std::size_t m) {
  return MCombinations(record.items, m);
}

std::map<ItemId, std::size_t> ItemFrequencies(
    std::span<const Record> records) {
  std::map<ItemId, std::size_t> freq;
  for (const Record& r : records) {
    for (ItemId id : r.items) ++freq[id];
  }
  return freq;
}

std::map<ItemId, std::size_t> ItemFrequencies(std::span<const Itemset> rows) {
  std::map<ItemId, std::size_t> freq;
  for (const Itemset& row : rows) {
    for (ItemId id : row) ++freq[id];
  }
  return freq;
}

std::uint64_t BinomialCoefficient(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

Itemset UnrankCombination(const Itemset& items, std::size_t m,
                          std::uint64_t rank) {
  const std::size_t n = items.size();
  if (m == 0 || m > n || rank >= BinomialCoefficient(n, m)) {
    throw ParameterError("combination rank out of range");
  }
  std::vector<ItemId> out;
  out.reserve(m);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < m; ++slot) {
    const std::size_t remaining = m - slot - 1;
    for (std::size_t c = next; c < n; ++c) {
      // Combinations whose slot-th element is items[c].
      const std::uint64_t block = BinomialCoefficient(n - c - 1, remaining);
      if (rank < block) {
        out.push_back(items[c]);
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
  return Itemset::FromSorted(std::move(out));
}

}  // namespace disassoc
