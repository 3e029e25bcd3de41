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

#include "disassoc/io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "disassoc/errors.h"
#include "json.hpp"

namespace disassoc {
namespace {

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  return in;
}

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t ParseCount(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

// `key=value` field of a header line.
std::string_view HeaderField(const std::vector<std::string_view>& tokens,
                             std::string_view key) {
  for (std::string_view t : tokens) {
    if (t.size() > key.size() && t.substr(0, key.size()) == key &&
        t[key.size()] == '=') {
      return t.substr(key.size() + 1);
    }
  }
  throw DataError("header is missing " + std::string(key));
}

// Chunk lines use '|' and ' ' as separators; labels escape them.
std::string EscapeLabel(std::string_view label) {
  std::string out;
  for (char c : label) {
    if (c == '%') {
      out += "%25";
    } else if (c == '|') {
      out += "%7C";
    } else {
      out += c;
    }
  }
  return out;
}

std::string UnescapeLabel(std::string_view label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label.substr(i, 3) == "%25") {
      out += '%';
      i += 2;
    } else if (label.substr(i, 3) == "%7C") {
      out += '|';
      i += 2;
    } else {
      out += label[i];
    }
  }
  return out;
}

std::string JoinLabels(const Itemset& items, const Vocabulary& vocabulary,
                       const BackgroundKnowledge* knowledge, char sep) {
  std::string out;
  for (ItemId id : items) {
    if (!out.empty()) out += sep;
    out += ItemLabel(id, vocabulary, knowledge);
  }
  return out;
}

std::string ChunkLabel(std::size_t index) {
  return "C" + std::to_string(index + 1);
}

}  // namespace

TableFormat ParseTableFormat(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json-lines") return TableFormat::kJsonLines;
  throw ParameterError("unknown format: " + std::string(name));
}

Dataset ParseTransactions(std::istream& in) {
  Dataset dataset;
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    std::vector<ItemId> ids;
    ids.reserve(tokens.size());
    for (std::string_view t : tokens) ids.push_back(dataset.vocabulary.Intern(t));
    dataset.records.push_back({Itemset(std::move(ids)), dataset.records.size()});
  }
  if (in.bad()) throw DataError("read error");
  if (dataset.records.empty()) throw DataError("input holds no records");
  return dataset;
}

Dataset ParseTransactions(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  try {
    return ParseTransactions(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void WriteTransactions(const Dataset& dataset, std::ostream& out) {
  for (const Record& r : dataset.records) {
    out << JoinLabels(r.items, dataset.vocabulary, nullptr, ' ') << '\n';
  }
}

Dataset ParseAolLog(std::istream& in) {
  Dataset dataset;
  std::unordered_map<std::string, std::size_t> user_row;
  std::vector<std::vector<ItemId>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto fields = Split(line, '\t');
    if (fields.size() < 2) continue;
    const std::string user(Trim(fields[0]));
    if (user.empty() || user == "AnonID") continue;
    const std::string_view query = Trim(fields[1]);
    if (query.empty() || query == "-") continue;
    auto [it, inserted] = user_row.try_emplace(user, rows.size());
    if (inserted) rows.emplace_back();
    for (std::string_view term : SplitWhitespace(query)) {
      rows[it->second].push_back(dataset.vocabulary.Intern(term));
    }
  }
  if (in.bad()) throw DataError("read error");
  for (auto& ids : rows) {
    dataset.records.push_back({Itemset(std::move(ids)), dataset.records.size()});
  }
  if (dataset.records.empty()) throw DataError("log holds no queries");
  return dataset;
}

Dataset ParseAolLog(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ParseAolLog(in);
}

void WriteDisassociated(const DisassociatedDataset& tstar,
                        const Vocabulary& vocabulary, std::ostream& out) {
  out << "#disassociated k=" << tstar.params.k << " m=" << tstar.params.m
      << " max-cluster-size=" << tstar.params.max_cluster_size << '\n';
  for (std::size_t i = 0; i < tstar.clusters.size(); ++i) {
    const Cluster& cluster = tstar.clusters[i];
    out << "#cluster " << i << ' ' << cluster.record_count << '\n';
    for (std::size_t c = 0; c < cluster.chunks.size(); ++c) {
      out << ChunkLabel(c) << ':';
      const auto& rows = cluster.chunks[c].sub_records;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        out << (r == 0 ? " " : "|");
        bool first = true;
        for (ItemId id : rows[r]) {
          if (!first) out << ' ';
          out << EscapeLabel(vocabulary.Label(id));
          first = false;
        }
      }
      out << '\n';
    }
    out << "T:";
    for (ItemId id : cluster.item_chunk.items) {
      out << ' ' << EscapeLabel(vocabulary.Label(id));
    }
    out << '\n';
  }
}

LoadedDisassociated ReadDisassociated(std::istream& in) {
  LoadedDisassociated loaded;
  auto& tstar = loaded.tstar;
  Cluster* cluster = nullptr;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw DataError("line " + std::to_string(line_no) + ": " + msg);
  };
  auto intern_items = [&](std::string_view text) {
    std::vector<ItemId> ids;
    for (std::string_view t : SplitWhitespace(text)) {
      ids.push_back(loaded.vocabulary.Intern(UnescapeLabel(t)));
    }
    return Itemset(std::move(ids));
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty()) continue;
    if (text.starts_with("#disassociated")) {
      const auto tokens = SplitWhitespace(text);
      tstar.params.k = ParseCount(HeaderField(tokens, "k"), "k");
      tstar.params.m = ParseCount(HeaderField(tokens, "m"), "m");
      tstar.params.max_cluster_size =
          ParseCount(HeaderField(tokens, "max-cluster-size"), "max-cluster-size");
      have_header = true;
    } else if (text.starts_with("#cluster")) {
      const auto tokens = SplitWhitespace(text);
      if (tokens.size() != 3) fail("expected '#cluster <index> <records>'");
      if (ParseCount(tokens[1], "cluster index") != tstar.clusters.size()) {
        fail("cluster indices must be consecutive from 0");
      }
      tstar.clusters.emplace_back();
      cluster = &tstar.clusters.back();
      cluster->record_count = ParseCount(tokens[2], "record count");
    } else if (text.starts_with("T:")) {
      if (!cluster) fail("item chunk outside a cluster");
      cluster->item_chunk.items = intern_items(text.substr(2));
    } else if (text.starts_with("C")) {
      if (!cluster) fail("record chunk outside a cluster");
      const std::size_t colon = text.find(':');
      if (colon == std::string_view::npos) fail("chunk line lacks ':'");
      if (ParseCount(text.substr(1, colon - 1), "chunk number") !=
          cluster->chunks.size() + 1) {
        fail("chunk numbers must be consecutive from 1");
      }
      RecordChunk chunk;
      std::vector<ItemId> domain;
      for (std::string_view part : Split(text.substr(colon + 1), '|')) {
        Itemset row = intern_items(part);
        if (row.empty()) fail("empty sub-record");
        domain.insert(domain.end(), row.begin(), row.end());
        chunk.sub_records.push_back(std::move(row));
      }
      chunk.items = Itemset(std::move(domain));
      if (chunk.sub_records.size() > cluster->record_count) {
        fail("chunk has more sub-records than the cluster has records");
      }
      cluster->chunks.push_back(std::move(chunk));
    } else {
      fail("unrecognized line");
    }
  }
  if (in.bad()) throw DataError("read error");
  if (!have_header) throw DataError("missing #disassociated header");
  return loaded;
}

LoadedDisassociated ReadDisassociated(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  try {
    return ReadDisassociated(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> ReadLexicon(std::istream& in,
                                     const Vocabulary& vocabulary) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view text = Trim(line);
    if (text.empty() || text.front() == '#') continue;
    std::string label;
    for (char c : text) {
      label += std::isspace(static_cast<unsigned char>(c)) ? '_' : c;
    }
    if (vocabulary.Find(label) || !seen.insert(label).second) continue;
    out.push_back(std::move(label));
  }
  return out;
}

std::vector<std::string> ReadLexicon(const std::filesystem::path& path,
                                     const Vocabulary& vocabulary) {
  auto in = OpenInput(path);
  return ReadLexicon(in, vocabulary);
}

std::string ItemLabel(ItemId id, const Vocabulary& vocabulary,
                      const BackgroundKnowledge* knowledge) {
  if (id < vocabulary.size()) return vocabulary.Label(id);
  if (knowledge && id >= knowledge->vocabulary_size &&
      id - knowledge->vocabulary_size < knowledge->foreign_labels.size()) {
    return knowledge->foreign_labels[id - knowledge->vocabulary_size];
  }
  throw DataError("item id " + std::to_string(id) + " has no label");
}

void WriteKnowledge(const BackgroundKnowledge& knowledge,
                    const Vocabulary& vocabulary, std::ostream& out) {
  out << "#knowledge " << AttackerClassName(knowledge.attacker)
      << " m=" << knowledge.m << " seed=" << knowledge.seed
      << " entries=" << knowledge.entries.size() << '\n';
  for (const KnowledgeEntry& e : knowledge.entries) {
    if (e.source_record) {
      out << *e.source_record;
    } else {
      out << '-';
    }
    out << ' ' << JoinLabels(e.items, vocabulary, &knowledge, ' ') << '\n';
  }
}

BackgroundKnowledge ReadKnowledge(std::istream& in,
                                  const Vocabulary& vocabulary) {
  BackgroundKnowledge bk;
  bk.vocabulary_size = vocabulary.size();
  std::unordered_map<std::string, ItemId> foreign;
  std::string line;
  bool have_header = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    const auto tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "#knowledge") {
      if (tokens.size() < 2) throw DataError("knowledge header lacks a class");
      try {
        bk.attacker = ParseAttackerClass(tokens[1]);
      } catch (const ParameterError& e) {
        throw DataError(e.what());
      }
      bk.m = ParseCount(HeaderField(tokens, "m"), "m");
      bk.seed = ParseCount(HeaderField(tokens, "seed"), "seed");
      expected = ParseCount(HeaderField(tokens, "entries"), "entries");
      have_header = true;
      continue;
    }
    if (!have_header) throw DataError("missing #knowledge header");
    KnowledgeEntry entry;
    if (tokens[0] != "-") entry.source_record = ParseCount(tokens[0], "record");
    std::vector<ItemId> ids;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (auto id = vocabulary.Find(tokens[i])) {
        ids.push_back(*id);
        continue;
      }
      std::string label(tokens[i]);
      auto [it, inserted] = foreign.try_emplace(
          label, static_cast<ItemId>(bk.vocabulary_size + bk.foreign_labels.size()));
      if (inserted) bk.foreign_labels.push_back(label);
      ids.push_back(it->second);
    }
    entry.items = Itemset(std::move(ids));
    if (entry.items.size() != bk.m) {
      throw DataError("knowledge itemset of size " +
                      std::to_string(entry.items.size()) + ", expected m=" +
                      std::to_string(bk.m));
    }
    bk.entries.push_back(std::move(entry));
  }
  if (!have_header) throw DataError("missing #knowledge header");
  if (bk.entries.size() != expected) {
    throw DataError("knowledge header announces " + std::to_string(expected) +
                    " entries, found " + std::to_string(bk.entries.size()));
  }
  return bk;
}

BackgroundKnowledge ReadKnowledge(const std::filesystem::path& path,
                                  const Vocabulary& vocabulary) {
  auto in = OpenInput(path);
  try {
    return ReadKnowledge(in, vocabulary);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void WriteCovers(std::span<const CoverInstance> covers,
                 const Vocabulary& vocabulary, TableFormat format,
                 std::ostream& out) {
  if (format == TableFormat::kCsv) {
    out << "cluster,targetChunk,target,prevChunk,covered,covering,"
           "candidateSize,singleton\n";
    for (const CoverInstance& c : covers) {
      out << c.cluster_index << ',' << ChunkLabel(c.target_chunk) << ','
          << vocabulary.Label(c.target_item) << ',' << ChunkLabel(c.prev_chunk)
          << ',' << JoinLabels(c.covered_items, vocabulary, nullptr, ' ')
          << ',' << JoinLabels(c.covering_items, vocabulary, nullptr, ' ')
          << ',' << c.candidate_set.size() << ',' << (c.singleton() ? 1 : 0)
          << '\n';
    }
    return;
  }
  for (const CoverInstance& c : covers) {
    nlohmann::json row;
    row["cluster"] = c.cluster_index;
    row["targetChunk"] = ChunkLabel(c.target_chunk);
    row["target"] = vocabulary.Label(c.target_item);
    row["prevChunk"] = ChunkLabel(c.prev_chunk);
    auto labels = [&](const Itemset& s) {
      std::vector<std::string> v;
      for (ItemId id : s) v.push_back(vocabulary.Label(id));
      return v;
    };
    row["candidateSet"] = labels(c.candidate_set);
    row["covered"] = labels(c.covered_items);
    row["covering"] = labels(c.covering_items);
    row["singleton"] = c.singleton();
    out << row.dump() << '\n';
  }
}

void WriteAuditReport(const AuditReport& report,
                      const BackgroundKnowledge& knowledge,
                      const Vocabulary& vocabulary, bool with_timing,
                      std::ostream& out) {
  std::size_t singletons = 0;
  for (const BreachPair& p : report.breach_pairs) singletons += p.singleton;
  out << "#audit-report\n";
  out << "attacker " << AttackerClassName(knowledge.attacker) << '\n';
  out << "knowledge-entries " << knowledge.entries.size() << '\n';
  out << "total " << report.total_vulnerable_records << '\n';
  out << "clusters " << report.per_cluster.size() << '\n';
  out << "breach-pairs " << report.breach_pairs.size() << '\n';
  out << "singleton-breach-pairs " << singletons << '\n';
  for (const ClusterBreach& c : report.per_cluster) {
    out << "cluster " << c.cluster_index << " max " << c.max_breach
        << " chunks";
    for (std::size_t b : c.chunk_breaches) out << ' ' << b;
    out << '\n';
  }
  for (const BreachPair& p : report.breach_pairs) {
    out << "pair cluster=" << p.cluster_index
        << " target=" << vocabulary.Label(p.target)
        << " target-chunk=" << ChunkLabel(p.target_chunk)
        << " covered=" << vocabulary.Label(p.covered)
        << " prev-chunk=" << ChunkLabel(p.prev_chunk)
        << " covering=" << JoinLabels(p.covering, vocabulary, nullptr, ',')
        << " knowledge=" << p.knowledge_entry << ':'
        << JoinLabels(knowledge.entries.at(p.knowledge_entry).items,
                      vocabulary, &knowledge, ',')
        << " singleton=" << (p.singleton ? 1 : 0) << '\n';
  }
  if (with_timing) {
    out << "elapsed-ms " << std::fixed << std::setprecision(3)
        << report.elapsed.count() << '\n';
    out.unsetf(std::ios::floatfield);
  }
}

}  // namespace disassoc
