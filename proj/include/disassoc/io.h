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

// Text formats.
//
// Transactions: one record per line, whitespace-separated item tokens.
// Blank lines are skipped and repeated tokens on a line collapse.
//
// Disassociated dataset:
//
//   #disassociated k=3 m=2 max-cluster-size=25
//   #cluster 0 6
//   C1: Cancer Oncologist|Cancer Oncologist Treatment|...
//   C2: Side-Effects|Side-Effects
//   T: Flu Vomiting
//
// Chunk lines list sub-records separated by '|', items by spaces. Clusters
// are numbered from 0, chunks from 1.
//
// Background knowledge:
//
//   #knowledge strong m=2 seed=0 entries=2
//   0 Cancer Side-Effects
//   - lexicon-word Oncologist          ('-' when not attributed to a record)
//
// Lexicon: one label per line, '#' lines are comments. Whitespace inside a
// label becomes '_' so that labels stay single tokens.

#ifndef DISASSOC_IO_H_
#define DISASSOC_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "disassoc/anonymizer.h"
#include "disassoc/attacker_sim.h"
#include "disassoc/breach_audit.h"
#include "disassoc/core_model.h"
#include "disassoc/cover_detector.h"

namespace disassoc {

enum class TableFormat { kCsv, kJsonLines };
TableFormat ParseTableFormat(std::string_view name);

// Throws DataError for unreadable input or a file without records.
Dataset ParseTransactions(const std::filesystem::path& path);
Dataset ParseTransactions(std::istream& in);
void WriteTransactions(const Dataset& dataset, std::ostream& out);

// AOL query-log rows (AnonID, Query, QueryTime, ItemRank, ClickURL, tab
// separated, header optional). Each user becomes one record holding the
// distinct query terms of all their queries, in first-seen user order.
Dataset ParseAolLog(const std::filesystem::path& path);
Dataset ParseAolLog(std::istream& in);

void WriteDisassociated(const DisassociatedDataset& tstar,
                        const Vocabulary& vocabulary, std::ostream& out);

struct LoadedDisassociated {
  DisassociatedDataset tstar;
  // Built from the labels in the file, in order of first appearance.
  Vocabulary vocabulary;
};
LoadedDisassociated ReadDisassociated(std::istream& in);
LoadedDisassociated ReadDisassociated(const std::filesystem::path& path);

// Drops comments, blank lines, duplicates and labels already in
// `vocabulary`.
std::vector<std::string> ReadLexicon(std::istream& in,
                                     const Vocabulary& vocabulary);
std::vector<std::string> ReadLexicon(const std::filesystem::path& path,
                                     const Vocabulary& vocabulary);

void WriteKnowledge(const BackgroundKnowledge& knowledge,
                    const Vocabulary& vocabulary, std::ostream& out);
// Labels unknown to `vocabulary` become foreign labels.
BackgroundKnowledge ReadKnowledge(std::istream& in,
                                  const Vocabulary& vocabulary);
BackgroundKnowledge ReadKnowledge(const std::filesystem::path& path,
                                  const Vocabulary& vocabulary);

// Label for an id that may be a foreign knowledge label.
std::string ItemLabel(ItemId id, const Vocabulary& vocabulary,
                      const BackgroundKnowledge* knowledge = nullptr);

void WriteCovers(std::span<const CoverInstance> covers,
                 const Vocabulary& vocabulary, TableFormat format,
                 std::ostream& out);

// Structured text, one `key value...` fact per line. Timing lines are left
// out when `with_timing` is false so that reports can be compared bytewise.
void WriteAuditReport(const AuditReport& report,
                      const BackgroundKnowledge& knowledge,
                      const Vocabulary& vocabulary, bool with_timing,
                      std::ostream& out);

}  // namespace disassoc

#endif  // DISASSOC_IO_H_
