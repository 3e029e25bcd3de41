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

#include "disassoc/experiment.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "disassoc/anonymizer.h"
#include "disassoc/cover_detector.h"
#include "disassoc/errors.h"
#include "json.hpp"

namespace disassoc {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string FormatMillis(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

BackgroundKnowledge BuildKnowledge(const ExperimentConfig& config,
                                   const Dataset& dataset,
                                   std::span<const CoverInstance> covers,
                                   std::span<const std::string> lexicon) {
  switch (config.attacker) {
    case AttackerClass::kStrong:
      return GenerateStrong(dataset, covers, config.m);
    case AttackerClass::kModerate: {
      const std::size_t z =
          config.z != 0 ? config.z : DefaultModerateZ(dataset, config.m);
      return GenerateModerate(dataset, config.m, z, config.seed);
    }
    case AttackerClass::kWeak:
      return GenerateWeak(dataset, lexicon, config.weak_internal,
                          config.weak_external, config.m, config.seed);
  }
  throw ParameterError("unknown attacker class");
}

}  // namespace

void ValidateConfig(const ExperimentConfig& config) {
  if (config.k < 2) throw ParameterError("k must be at least 2");
  if (config.m < 1) throw ParameterError("m must be at least 1");
  for (std::size_t size : config.max_cluster_sizes) {
    if (size < config.k) {
      throw ParameterError("max cluster size " + std::to_string(size) +
                           " is below k=" + std::to_string(config.k));
    }
  }
}

std::vector<SweepPoint> RunSweep(const ExperimentConfig& config,
                                 const Dataset& dataset,
                                 std::span<const std::string> lexicon) {
  ValidateConfig(config);
  std::vector<SweepPoint> points;
  // Sequential on purpose: points must not compete for cores while timed.
  for (std::size_t size : config.max_cluster_sizes) {
    SweepPoint point;
    SweepRow& row = point.row;
    row.max_cluster_size = size;
    const auto start = Clock::now();
    try {
      auto t = Clock::now();
      const DisassociatedDataset tstar =
          Disassociate(dataset, config.k, config.m, size);
      row.stages.disassociate_ms = MillisSince(t);

      t = Clock::now();
      const std::vector<CoverInstance> covers = DetectAllCovers(tstar);
      row.stages.covers_ms = MillisSince(t);

      t = Clock::now();
      const BackgroundKnowledge knowledge =
          BuildKnowledge(config, dataset, covers, lexicon);
      row.stages.knowledge_ms = MillisSince(t);

      t = Clock::now();
      const AuditReport report = Audit(tstar, knowledge);
      row.stages.audit_ms = MillisSince(t);

      row.total = report.total_vulnerable_records;
      row.covers = covers.size();
      row.clusters = tstar.clusters.size();
      row.elapsed_ms = MillisSince(start);

      std::ostringstream text;
      text << "max-cluster-size " << size << '\n';
      text << "k " << config.k << '\n' << "m " << config.m << '\n';
      text << "seed " << config.seed << '\n';
      text << "covers " << covers.size() << '\n';
      if (config.record_timing) {
        text << "stage-ms disassociate " << FormatMillis(row.stages.disassociate_ms)
             << " covers " << FormatMillis(row.stages.covers_ms) << " knowledge "
             << FormatMillis(row.stages.knowledge_ms) << " audit "
             << FormatMillis(row.stages.audit_ms) << '\n';
      }
      WriteAuditReport(report, knowledge, dataset.vocabulary,
                       config.record_timing, text);
      point.report = text.str();
    } catch (const std::exception& e) {
      row.error = e.what();
      row.elapsed_ms = MillisSince(start);
    }
    if (!config.record_timing) {
      row.elapsed_ms = 0;
      row.stages = {};
    }
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<SweepRow> RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  const Dataset dataset = config.aol_input ? ParseAolLog(config.input_path)
                                           : ParseTransactions(config.input_path);
  std::vector<std::string> lexicon;
  if (config.attacker == AttackerClass::kWeak) {
    if (config.lexicon_path.empty()) {
      throw ParameterError("the weak attacker needs --lexicon");
    }
    lexicon = ReadLexicon(config.lexicon_path, dataset.vocabulary);
  }
  const auto points = RunSweep(config, dataset, lexicon);

  std::filesystem::create_directories(config.output_dir);
  std::vector<SweepRow> rows;
  for (const SweepPoint& p : points) {
    rows.push_back(p.row);
    if (p.row.error) continue;
    std::ofstream report(config.output_dir /
                         ("report-" + std::to_string(p.row.max_cluster_size) + ".txt"));
    report << p.report;
  }
  const char* name =
      config.format == TableFormat::kCsv ? "sweep.csv" : "sweep.jsonl";
  std::ofstream out(config.output_dir / name);
  if (!out) throw DataError("cannot write " + (config.output_dir / name).string());
  WriteSweep(rows, config.format, out);
  return rows;
}

void WriteSweep(std::span<const SweepRow> rows, TableFormat format,
                std::ostream& out) {
  if (format == TableFormat::kCsv) {
    out << "maxClusterSize,total,covers,clusters,elapsedMs\n";
    for (const SweepRow& r : rows) {
      out << r.max_cluster_size << ',';
      if (r.error) {
        out << "error,error,error,";
      } else {
        out << r.total << ',' << r.covers << ',' << r.clusters << ',';
      }
      out << FormatMillis(r.elapsed_ms) << '\n';
    }
    return;
  }
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json row;
    row["maxClusterSize"] = r.max_cluster_size;
    if (r.error) {
      row["error"] = *r.error;
    } else {
      row["total"] = r.total;
      row["covers"] = r.covers;
      row["clusters"] = r.clusters;
    }
    row["elapsedMs"] = r.elapsed_ms;
    out << row.dump() << '\n';
  }
}

}  // namespace disassoc
