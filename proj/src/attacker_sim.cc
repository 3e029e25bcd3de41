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

#include "disassoc/attacker_sim.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "disassoc/errors.h"
#include "disassoc/random.h"

namespace disassoc {

std::string_view AttackerClassName(AttackerClass c) {
  switch (c) {
    case AttackerClass::kStrong:
      return "strong";
    case AttackerClass::kModerate:
      return "moderate";
    case AttackerClass::kWeak:
      return "weak";
  }
  return "unknown";
}

AttackerClass ParseAttackerClass(std::string_view name) {
  if (name == "strong") return AttackerClass::kStrong;
  if (name == "moderate") return AttackerClass::kModerate;
  if (name == "weak") return AttackerClass::kWeak;
  throw ParameterError("unknown attacker class: " + std::string(name));
}

namespace {

// `pair` plus the smallest remaining record items, up to m items.
Itemset CompletePair(const Itemset& record, ItemId a, ItemId b,
                     std::size_t m) {
  std::vector<ItemId> ids{std::min(a, b), std::max(a, b)};
  for (ItemId id : record) {
    if (ids.size() >= m) break;
    if (id != a && id != b) ids.push_back(id);
  }
  return Itemset(std::move(ids));
}

}  // namespace

BackgroundKnowledge GenerateStrong(const Dataset& dataset,
                                   std::span<const CoverInstance> covers,
                                   std::size_t m) {
  if (m < 2) throw ParameterError("strong knowledge needs m >= 2");
  BackgroundKnowledge bk;
  bk.attacker = AttackerClass::kStrong;
  bk.m = m;
  bk.vocabulary_size = dataset.vocabulary.size();

  // target -> covered items
  std::map<ItemId, std::set<ItemId>> implicated;
  for (const CoverInstance& c : covers) {
    for (ItemId y : c.covered_items) implicated[c.target_item].insert(y);
  }
  std::set<std::pair<ItemId, ItemId>> used;  // unordered pairs, min first

  for (const Record& r : dataset.records) {
    if (r.items.size() < m) {
      ++bk.skipped_records;
      continue;
    }
    std::optional<std::pair<ItemId, ItemId>> first, fresh;
    for (ItemId x : r.items) {
      auto it = implicated.find(x);
      if (it == implicated.end()) continue;
      for (ItemId y : it->second) {
        if (!r.items.Contains(y)) continue;
        if (!first) first.emplace(x, y);
        if (!used.contains({std::min(x, y), std::max(x, y)})) {
          fresh.emplace(x, y);
          break;
        }
      }
      if (fresh) break;
    }
    Itemset chosen;
    if (auto pick = fresh ? fresh : first) {
      used.insert({std::min(pick->first, pick->second),
                   std::max(pick->first, pick->second)});
      chosen = CompletePair(r.items, pick->first, pick->second, m);
    } else {
      chosen = UnrankCombination(r.items, m, 0);
    }
    bk.entries.push_back({std::move(chosen), r.ordinal});
  }
  return bk;
}

BackgroundKnowledge GenerateModerate(const Dataset& dataset, std::size_t m,
                                     std::size_t z, std::uint64_t seed) {
  if (m < 1) throw ParameterError("m must be at least 1");
  const std::size_t n = dataset.records.size();
  if (z < 1 || z >= n) {
    throw ParameterError("moderate knowledge needs 1 <= z < n (z=" +
                         std::to_string(z) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < n; ++i) {
    if (dataset.records[i].items.size() > m) eligible.push_back(i);
  }
  if (eligible.size() < z) {
    throw DataError("only " + std::to_string(eligible.size()) +
                    " records have more than m items; z=" + std::to_string(z));
  }

  BackgroundKnowledge bk;
  bk.attacker = AttackerClass::kModerate;
  bk.seed = seed;
  bk.m = m;
  bk.vocabulary_size = dataset.vocabulary.size();
  bk.skipped_records = n - eligible.size();

  SeededRng rng(seed);
  std::vector<std::size_t> picked;
  for (std::size_t slot : rng.Sample(eligible.size(), z)) {
    picked.push_back(eligible[slot]);
  }
  std::sort(picked.begin(), picked.end());
  for (std::size_t idx : picked) {
    const Record& r = dataset.records[idx];
    // Strict subset of [r]_m: everything but the lexicographically last.
    const std::uint64_t total = BinomialCoefficient(r.items.size(), m);
    const std::uint64_t rank = rng.UniformBelow(total - 1);
    bk.entries.push_back({UnrankCombination(r.items, m, rank), r.ordinal});
  }
  return bk;
}

std::size_t DefaultModerateZ(const Dataset& dataset, std::size_t m) {
  std::size_t eligible = 0;
  for (const Record& r : dataset.records) eligible += r.items.size() > m;
  return std::max<std::size_t>(1, std::min(dataset.records.size() / 2, eligible));
}

BackgroundKnowledge GenerateWeak(const Dataset& dataset,
                                 std::span<const std::string> lexicon,
                                 std::size_t n_internal,
                                 std::size_t n_external, std::size_t m,
                                 std::uint64_t seed) {
  if (m < 1) throw ParameterError("m must be at least 1");
  const std::size_t vocab = dataset.vocabulary.size();
  if (n_internal > vocab) {
    throw DataError("vocabulary has " + std::to_string(vocab) +
                    " items, fewer than " + std::to_string(n_internal));
  }
  if (n_external > lexicon.size()) {
    throw DataError("lexicon has " + std::to_string(lexicon.size()) +
                    " usable labels, fewer than " + std::to_string(n_external));
  }

  BackgroundKnowledge bk;
  bk.attacker = AttackerClass::kWeak;
  bk.seed = seed;
  bk.m = m;
  bk.vocabulary_size = vocab;

  SeededRng rng(seed);
  std::vector<ItemId> pool;
  for (std::size_t id : rng.Sample(vocab, n_internal)) {
    pool.push_back(static_cast<ItemId>(id));
  }
  for (std::size_t idx : rng.Sample(lexicon.size(), n_external)) {
    pool.push_back(static_cast<ItemId>(vocab + bk.foreign_labels.size()));
    bk.foreign_labels.push_back(lexicon[idx]);
  }
  const Itemset all(std::move(pool));
  ForEachCombination(all.ids(), m, [&](std::span<const ItemId> c) {
    bk.entries.push_back({Itemset::FromSorted({c.begin(), c.end()}), std::nullopt});
  });
  return bk;
}

}  // namespace disassoc
