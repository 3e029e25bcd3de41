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

// Background knowledge for the three attacker classes.
//
//   strong    one size-m itemset per record, chosen to contain a cover's
//             (target, covered) pair whenever the record holds one;
//   moderate  z < n records sampled uniformly, one m-combination each drawn
//             from a strict subset of the record's m-combinations;
//   weak      every m-combination of a pool of dataset items plus external
//             labels, attributed to no record.
//
// All generators are deterministic for a given seed (see random.h).

#ifndef DISASSOC_ATTACKER_SIM_H_
#define DISASSOC_ATTACKER_SIM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disassoc/core_model.h"
#include "disassoc/cover_detector.h"

namespace disassoc {

enum class AttackerClass { kStrong, kModerate, kWeak };

std::string_view AttackerClassName(AttackerClass c);
// Throws ParameterError for anything but "strong", "moderate" or "weak".
AttackerClass ParseAttackerClass(std::string_view name);

struct KnowledgeEntry {
  Itemset items;
  // Ordinal of the record the itemset was taken from; absent for weak.
  std::optional<std::size_t> source_record;

  friend bool operator==(const KnowledgeEntry&, const KnowledgeEntry&) = default;
};

struct BackgroundKnowledge {
  AttackerClass attacker = AttackerClass::kStrong;
  std::uint64_t seed = 0;
  std::size_t m = 2;
  std::vector<KnowledgeEntry> entries;
  // Labels that are not part of the dataset vocabulary. The i-th label has
  // id vocabulary_size + i.
  std::vector<std::string> foreign_labels;
  std::size_t vocabulary_size = 0;
  // Records passed over because they hold too few items.
  std::size_t skipped_records = 0;

  friend bool operator==(const BackgroundKnowledge&,
                         const BackgroundKnowledge&) = default;
};

// Throws ParameterError when m < 2.
BackgroundKnowledge GenerateStrong(const Dataset& dataset,
                                   std::span<const CoverInstance> covers,
                                   std::size_t m);

// Throws ParameterError unless 1 <= z < n, and DataError when fewer than z
// records have more than m items.
BackgroundKnowledge GenerateModerate(const Dataset& dataset, std::size_t m,
                                     std::size_t z, std::uint64_t seed);

// z used when none is given: half the records, capped by the number of
// records holding more than m items (at least 1).
std::size_t DefaultModerateZ(const Dataset& dataset, std::size_t m);

// `lexicon` must hold labels absent from the dataset vocabulary (see
// ReadLexicon). Throws DataError when either pool is too small.
BackgroundKnowledge GenerateWeak(const Dataset& dataset,
                                 std::span<const std::string> lexicon,
                                 std::size_t n_internal,
                                 std::size_t n_external, std::size_t m,
                                 std::uint64_t seed);

}  // namespace disassoc

#endif  // DISASSOC_ATTACKER_SIM_H_
