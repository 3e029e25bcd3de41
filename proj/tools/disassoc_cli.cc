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

// Command-line front end.
//
//   disassoc anonymize  --input data.txt -k 3 -m 2 --max-cluster-size 25 --output out/
//   disassoc covers     --input out/disassociated.txt [--format json-lines]
//   disassoc attack-gen --input data.txt --attacker strong --max-cluster-size 25
//   disassoc audit      --input out/disassociated.txt --knowledge out/knowledge.txt
//   disassoc oracle     --input out/disassociated.txt --cluster 0 --pair e,c
//   disassoc experiment --input data.txt --max-cluster-size 6,12,25,50 --output out/
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 oracle enumeration
// too large.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disassoc/anonymizer.h"
#include "disassoc/attacker_sim.h"
#include "disassoc/breach_audit.h"
#include "disassoc/cover_detector.h"
#include "disassoc/errors.h"
#include "disassoc/experiment.h"
#include "disassoc/io.h"

namespace fs = std::filesystem;

namespace disassoc {
namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kInfeasible = 3;

struct Options {
  std::string input;
  std::string output;
  std::size_t k = 3;
  std::size_t m = 2;
  std::vector<std::size_t> max_cluster_sizes;
  std::string attacker = "strong";
  std::uint64_t seed = 1;
  std::size_t z = 0;
  std::string lexicon;
  std::string format = "csv";
  // Subcommand-specific.
  std::string knowledge;
  std::size_t cluster = 0;
  std::vector<std::string> pair;
  std::uint64_t limit = 100000;
  std::size_t merge_check_size = 0;
  bool aol = false;
  bool no_timing = false;
};

void AddSharedFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Input file")->required();
  cmd->add_option("--output", o.output, "Output directory (default: stdout)");
  cmd->add_option("-k", o.k, "Anonymity threshold k (>= 2)");
  cmd->add_option("-m", o.m, "Attacker knowledge size m (>= 1)");
  cmd->add_option("--max-cluster-size", o.max_cluster_sizes,
                  "Maximum cluster size(s), comma separated")
      ->delimiter(',');
  cmd->add_option("--attacker", o.attacker, "strong|moderate|weak")
      ->check(CLI::IsMember({"strong", "moderate", "weak"}));
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--z", o.z, "Moderate knowledge size (default: n/2, capped by eligible records)");
  cmd->add_option("--lexicon", o.lexicon, "External labels for the weak attacker");
  cmd->add_option("--format", o.format, "csv|json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}));
}

std::size_t SingleClusterSize(const Options& o) {
  if (o.max_cluster_sizes.size() != 1) {
    throw ParameterError("exactly one --max-cluster-size is required");
  }
  return o.max_cluster_sizes.front();
}

Dataset LoadDataset(const Options& o) {
  return o.aol ? ParseAolLog(fs::path(o.input)) : ParseTransactions(fs::path(o.input));
}

// Writes `content` to <output>/<name>, or to stdout without --output.
void Emit(const Options& o, const std::string& name, const std::string& content) {
  if (o.output.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(o.output);
  const fs::path path = fs::path(o.output) / name;
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
  std::cerr << "wrote " << path.string() << '\n';
}

void RunAnonymize(const Options& o) {
  const Dataset dataset = LoadDataset(o);
  const auto tstar = Disassociate(dataset, o.k, o.m, SingleClusterSize(o));
  std::ostringstream text;
  WriteDisassociated(tstar, dataset.vocabulary, text);
  Emit(o, "disassociated.txt", text.str());
}

void RunCovers(const Options& o) {
  const auto loaded = ReadDisassociated(fs::path(o.input));
  const auto covers = DetectAllCovers(loaded.tstar);
  const TableFormat format = ParseTableFormat(o.format);
  std::ostringstream text;
  WriteCovers(covers, loaded.vocabulary, format, text);
  Emit(o, format == TableFormat::kCsv ? "covers.csv" : "covers.jsonl", text.str());
}

void RunAttackGen(const Options& o) {
  const Dataset dataset = LoadDataset(o);
  BackgroundKnowledge knowledge;
  switch (ParseAttackerClass(o.attacker)) {
    case AttackerClass::kStrong: {
      const auto tstar = Disassociate(dataset, o.k, o.m, SingleClusterSize(o));
      knowledge = GenerateStrong(dataset, DetectAllCovers(tstar), o.m);
      if (knowledge.entries.empty()) {
        std::cerr << "warning: no record has " << o.m
                  << " items; knowledge is empty\n";
      }
      break;
    }
    case AttackerClass::kModerate: {
      const std::size_t z = o.z != 0 ? o.z : DefaultModerateZ(dataset, o.m);
      knowledge = GenerateModerate(dataset, o.m, z, o.seed);
      break;
    }
    case AttackerClass::kWeak: {
      if (o.lexicon.empty()) throw ParameterError("the weak attacker needs --lexicon");
      const auto lexicon = ReadLexicon(fs::path(o.lexicon), dataset.vocabulary);
      knowledge = GenerateWeak(dataset, lexicon, 10, 10, o.m, o.seed);
      break;
    }
  }
  if (knowledge.skipped_records > 0) {
    std::cerr << "warning: " << knowledge.skipped_records
              << " records skipped for holding too few items\n";
  }
  std::ostringstream text;
  WriteKnowledge(knowledge, dataset.vocabulary, text);
  Emit(o, "knowledge.txt", text.str());
}

void RunAudit(const Options& o) {
  if (o.knowledge.empty()) throw ParameterError("audit needs --knowledge");
  const auto loaded = ReadDisassociated(fs::path(o.input));
  const auto knowledge = ReadKnowledge(fs::path(o.knowledge), loaded.vocabulary);
  const auto report = Audit(loaded.tstar, knowledge);
  std::ostringstream text;
  WriteAuditReport(report, knowledge, loaded.vocabulary, !o.no_timing, text);
  Emit(o, "report.txt", text.str());
}

void RunOracle(const Options& o) {
  const auto loaded = ReadDisassociated(fs::path(o.input));
  if (o.cluster >= loaded.tstar.clusters.size()) {
    throw ParameterError("cluster " + std::to_string(o.cluster) +
                         " does not exist");
  }
  std::vector<ItemId> ids;
  for (const std::string& label : o.pair) {
    auto id = loaded.vocabulary.Find(label);
    if (!id) throw ParameterError("unknown item: " + label);
    ids.push_back(*id);
  }
  const Itemset itemset(std::move(ids));
  if (itemset.size() != 2) throw ParameterError("--pair needs two distinct items");

  ReconstructionOptions options;
  options.k = loaded.tstar.params.k;
  options.merge_check_size =
      o.merge_check_size != 0 ? o.merge_check_size : loaded.tstar.params.m;
  options.limit = o.limit;
  const Cluster& cluster = loaded.tstar.clusters[o.cluster];
  const OracleVerdict v = BreachOracle(cluster, itemset, options);

  std::ostringstream text;
  text << "cluster " << o.cluster << '\n';
  text << "pair " << o.pair[0] << ',' << o.pair[1] << '\n';
  text << "reconstructions " << v.reconstructions << '\n';
  text << "valid " << v.valid_reconstructions << '\n';
  text << "vulnerable " << (v.vulnerable ? "yes" : "no") << '\n';
  text << "deanonymized " << (v.deanonymized ? "yes" : "no") << '\n';
  text << "linked";
  for (ItemId id : v.linked_items) text << ' ' << loaded.vocabulary.Label(id);
  text << '\n';
  Emit(o, "oracle.txt", text.str());
}

void RunExperimentCommand(const Options& o) {
  if (o.output.empty()) throw ParameterError("experiment needs --output");
  ExperimentConfig config;
  config.k = o.k;
  config.m = o.m;
  config.max_cluster_sizes = o.max_cluster_sizes;
  config.attacker = ParseAttackerClass(o.attacker);
  config.seed = o.seed;
  config.z = o.z;
  config.lexicon_path = o.lexicon;
  config.input_path = o.input;
  config.aol_input = o.aol;
  config.output_dir = o.output;
  config.format = ParseTableFormat(o.format);
  config.record_timing = !o.no_timing;
  const auto rows = RunExperiment(config);
  for (const SweepRow& r : rows) {
    if (r.error) {
      std::cerr << "max-cluster-size " << r.max_cluster_size
                << " failed: " << *r.error << '\n';
    }
  }
}

}  // namespace
}  // namespace disassoc

int main(int argc, char** argv) {
  using namespace disassoc;
  CLI::App app{"Disassociation, cover-problem detection and privacy-breach audit"};
  app.require_subcommand(1);
  Options o;

  auto* anonymize = app.add_subcommand("anonymize", "Disassociate a transaction file");
  AddSharedFlags(anonymize, o);
  anonymize->add_flag("--aol", o.aol, "Input is an AOL query log");

  auto* covers = app.add_subcommand("covers", "List cover problems of a disassociated file");
  AddSharedFlags(covers, o);

  auto* attack = app.add_subcommand("attack-gen", "Generate attacker background knowledge");
  AddSharedFlags(attack, o);
  attack->add_flag("--aol", o.aol, "Input is an AOL query log");

  auto* audit = app.add_subcommand("audit", "Count vulnerable records");
  AddSharedFlags(audit, o);
  audit->add_option("--knowledge", o.knowledge, "Knowledge file from attack-gen");
  audit->add_flag("--no-timing", o.no_timing, "Leave timings out of the report");

  auto* oracle = app.add_subcommand("oracle", "Check a pair against all reconstructions");
  AddSharedFlags(oracle, o);
  oracle->add_option("--cluster", o.cluster, "Cluster index");
  oracle->add_option("--pair", o.pair, "Two item labels, comma separated")
      ->delimiter(',')
      ->required();
  oracle->add_option("--limit", o.limit, "Maximum number of alignments");
  oracle->add_option("--merge-check-size", o.merge_check_size,
                     "Itemset size bound of the validity check (default m)");

  auto* experiment = app.add_subcommand("experiment", "Sweep maximum cluster sizes");
  AddSharedFlags(experiment, o);
  experiment->add_flag("--aol", o.aol, "Input is an AOL query log");
  experiment->add_flag("--no-timing", o.no_timing, "Write zero timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*anonymize) RunAnonymize(o);
    if (*covers) RunCovers(o);
    if (*attack) RunAttackGen(o);
    if (*audit) RunAudit(o);
    if (*oracle) RunOracle(o);
    if (*experiment) RunExperimentCommand(o);
  } catch (const InfeasibleEnumeration& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
