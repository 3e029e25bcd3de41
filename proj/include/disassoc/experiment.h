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

// Cluster-size sweeps: for each maximum cluster size, disassociate, detect
// covers, build the attacker's knowledge and audit, timing every stage.

#ifndef DISASSOC_EXPERIMENT_H_
#define DISASSOC_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disassoc/attacker_sim.h"
#include "disassoc/breach_audit.h"
#include "disassoc/core_model.h"
#include "disassoc/io.h"

namespace disassoc {

struct ExperimentConfig {
  std::size_t k = 3;
  std::size_t m = 2;
  std::vector<std::size_t> max_cluster_sizes;
  AttackerClass attacker = AttackerClass::kStrong;
  std::uint64_t seed = 1;
  // Moderate knowledge size; 0 means DefaultModerateZ.
  std::size_t z = 0;
  std::size_t weak_internal = 10;
  std::size_t weak_external = 10;
  std::filesystem::path lexicon_path;
  std::filesystem::path input_path;
  bool aol_input = false;
  std::filesystem::path output_dir;
  TableFormat format = TableFormat::kCsv;
  // Off: elapsed times are written as 0 and left out of reports, so that
  // repeated runs produce identical files.
  bool record_timing = true;
};

// Throws ParameterError for k < 2, m < 1 or a cluster size below k.
void ValidateConfig(const ExperimentConfig& config);

struct StageTimings {
  double disassociate_ms = 0;
  double covers_ms = 0;
  double knowledge_ms = 0;
  double audit_ms = 0;
};

struct SweepRow {
  std::size_t max_cluster_size = 0;
  std::size_t total = 0;
  std::size_t covers = 0;
  std::size_t clusters = 0;
  double elapsed_ms = 0;
  StageTimings stages;
  // Set when a stage failed; the other fields are then meaningless.
  std::optional<std::string> error;
};

struct SweepPoint {
  SweepRow row;
  // Serialized audit report (empty on error).
  std::string report;
};

// Runs the sweep in memory. `lexicon` is only used by the weak attacker.
std::vector<SweepPoint> RunSweep(const ExperimentConfig& config,
                                 const Dataset& dataset,
                                 std::span<const std::string> lexicon);

// Loads the input, runs the sweep and writes `sweep.csv` (or
// `sweep.jsonl`) plus `report-<size>.txt` per point into output_dir.
std::vector<SweepRow> RunExperiment(const ExperimentConfig& config);

void WriteSweep(std::span<const SweepRow> rows, TableFormat format,
                std::ostream& out);

}  // namespace disassoc

#endif  // DISASSOC_EXPERIMENT_H_
