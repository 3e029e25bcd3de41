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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "disassoc/anonymizer.h"
#include "disassoc/attacker_sim.h"
#include "disassoc/breach_audit.h"
#include "disassoc/cover_detector.h"
#include "disassoc/experiment.h"
#include "disassoc/io.h"
#include "disassoc/synthetic.h"
#include "test_util.h"

namespace disassoc {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure message; later ones only count.
struct Checker {
  Outcome out;
  std::size_t failures = 0;
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) out.detail = what;
    out.pass = false;
  }
};

Outcome CoveredPair() {
  const auto start = Clock::now();
  Checker c;
  const Cluster cluster = testing::CoveredPairCluster();
  const auto covers = DetectCovers(cluster);
  c.Expect(covers.size() == 1, "expected one cover, got " + std::to_string(covers.size()));
  if (covers.size() == 1) {
    c.Expect(covers[0].target_item == testing::kE, "cover target is not e");
    c.Expect(covers[0].covered_items == Itemset{testing::kC}, "covered is not {c}");
    c.Expect(covers[0].covering_items == Itemset{testing::kA, testing::kB},
             "covering is not {a,b}");
  }
  const ReconstructionOptions opts{2, 2, 10000};
  const auto recs = EnumerateReconstructions(cluster, opts);
  const auto valid = std::count_if(recs.begin(), recs.end(),
                                   [](const auto& r) { return r.valid; });
  c.Expect(recs.size() == 6 && valid == 5,
           std::to_string(recs.size()) + " reconstructions, " +
               std::to_string(valid) + " valid");
  const auto v = BreachOracle(cluster, Itemset{testing::kC, testing::kE}, opts);
  c.Expect(v.vulnerable, "{e,c} not vulnerable");
  c.Expect(v.linked_items.Includes(Itemset{testing::kA, testing::kB}),
           "linked items miss a or b");
  const double secs = Seconds(start);
  c.Expect(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (c.out.pass) {
    c.out.detail = "1 cover (e; c | a b), 6 reconstructions, 5 valid, {e,c} vulnerable";
  }
  return c.out;
}

Outcome HealthSearch() {
  Checker c;
  const Dataset d = testing::HealthSearchDataset();
  const auto t = Disassociate(d, 3, 2, d.records.size());
  c.Expect(t.clusters.size() == 1, "expected one cluster");
  std::size_t violations = 0;
  for (const auto& cl : t.clusters) {
    for (const auto& ch : cl.chunks) violations += VerifyKmAnonymous(ch, 3, 2).size();
  }
  c.Expect(violations == 0, std::to_string(violations) + " violations");
  const auto covers = DetectAllCovers(t);
  const bool found = std::any_of(covers.begin(), covers.end(), [&](const auto& cv) {
    return cv.target_item == testing::Id(d, "Side_Effects") &&
           cv.covered_items == testing::Ids(d, {"Cancer"}) &&
           cv.covering_items == testing::Ids(d, {"Treatment", "Oncologist"});
  });
  c.Expect(found, "no cover of Cancer by {Treatment, Oncologist} for Side_Effects");
  if (c.out.pass) {
    c.out.detail = "0 violations, Cancer covered by {Oncologist, Treatment} w.r.t. Side_Effects";
  }
  return c.out;
}

Outcome AnonymizerSoundness() {
  const auto start = Clock::now();
  Checker c;
  SeededRng rng(2026);
  std::size_t chunks = 0;
  const int kDatasets = 1000;
  for (int trial = 0; trial < kDatasets; ++trial) {
    const Dataset d = testing::RandomDataset(rng, {500, 30, 10});
    const std::size_t k = 2 + rng.UniformBelow(3);
    const std::size_t m = 1 + rng.UniformBelow(3);
    const std::size_t max_size = k + rng.UniformBelow(60);
    const auto t = Disassociate(d, k, m, max_size);
    const auto groups = HorizontalPartition(d.records, max_size, k);
    const std::string tag = "dataset " + std::to_string(trial);
    c.Expect(t.clusters.size() == groups.size(), tag + ": cluster count");
    if (t.clusters.size() != groups.size()) continue;
    std::size_t records = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const Cluster& cl = t.clusters[g];
      const auto& group = groups[g];
      records += cl.record_count;
      std::map<ItemId, std::size_t> occurrences;
      for (const auto& r : group) {
        for (ItemId id : r.items) ++occurrences[id];
      }
      std::map<ItemId, std::size_t> kept;
      for (const auto& ch : cl.chunks) {
        ++chunks;
        c.Expect(VerifyKmAnonymous(ch, k, m).empty(), tag + ": chunk has violations");
        // Independent check against the original records of the cluster.
        for (const auto& row : ch.sub_records) {
          for (std::size_t len = 1; len <= std::min(m, row.size()); ++len) {
            for (const auto& s : MCombinations(row, len)) {
              c.Expect(Support(s, std::span<const Record>(group)) >= k,
                       tag + ": itemset below k in the original cluster");
            }
          }
          for (ItemId id : row) ++kept[id];
        }
      }
      for (ItemId id : cl.item_chunk.items) {
        c.Expect(occurrences.count(id) && occurrences[id] < k,
                 tag + ": item-chunk item with support >= k");
        kept[id] += occurrences[id];
      }
      c.Expect(kept == occurrences, tag + ": items not conserved");
    }
    c.Expect(records == d.records.size(), tag + ": records not conserved");
  }
  const double secs = Seconds(start);
  c.Expect(secs < 300.0, "took " + std::to_string(secs) + " s");
  if (c.out.pass) {
    std::ostringstream s;
    s << kDatasets << " datasets, " << chunks << " chunks, 0 violations, "
      << std::fixed;
    s.precision(1);
    s << secs << " s";
    c.out.detail = s.str();
  }
  return c.out;
}

Outcome OracleConsistency() {
  Checker c;
  SeededRng rng(4);
  std::size_t clusters = 0, pairs = 0, checked = 0, vulnerable = 0;
  for (int attempt = 0; attempt < 200000 && clusters < 250; ++attempt) {
    const Dataset d = testing::RandomDataset(rng, {6, 6, 5});
    const Cluster cl = VerticalPartition(d.records, 2, 2);
    if (cl.chunks.size() < 2 || CountAlignments(cl) > 10000) continue;
    DisassociatedDataset t;
    t.params = {2, 2, cl.record_count};
    t.clusters.push_back(cl);
    // Every pair of the cluster's items is known, so every cover pair counts.
    BackgroundKnowledge bk;
    bk.m = 2;
    Itemset all;
    for (const auto& ch : cl.chunks) all = all.Union(ch.items);
    for (const auto& p : MCombinations(all, 2)) bk.entries.push_back({p, std::nullopt});
    const auto report = Audit(t, bk);
    if (report.breach_pairs.empty()) continue;
    ++clusters;
    const auto recs = EnumerateReconstructions(cl, {2, 2, 10000});
    for (const auto& bp : report.breach_pairs) {
      ++pairs;
      const Itemset pair{bp.target, bp.covered};
      const Itemset joint = pair.Union(bp.covering);
      for (const auto& r : recs) {
        if (!r.valid) continue;
        const std::size_t s = Support(pair, r.records);
        if (s < 2) continue;
        ++checked;
        c.Expect(Support(joint, r.records) == s,
                 "counterexample in cluster " + std::to_string(clusters));
      }
      vulnerable += BreachOracle(cl, pair, {2, 2, 10000}).vulnerable;
    }
  }
  c.Expect(clusters >= 200, "only " + std::to_string(clusters) + " clusters with breaches");
  if (c.out.pass) {
    c.out.detail = std::to_string(clusters) + " clusters, " + std::to_string(pairs) +
                   " breach pairs, " + std::to_string(checked) +
                   " reconstruction checks, 0 counterexamples (" +
                   std::to_string(vulnerable) + " pairs vulnerable per oracle)";
  }
  return c.out;
}

Outcome StrongEquivalence() {
  Checker c;
  SeededRng rng(5);
  std::size_t total_sum = 0, cluster_sum = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Dataset d = testing::RandomDataset(rng, {400, 25, 8});
    const std::size_t k = 2 + rng.UniformBelow(2);
    const auto t = Disassociate(d, k, 2, 6 + rng.UniformBelow(40));
    const auto covers = DetectAllCovers(t);
    const auto bk = GenerateStrong(d, covers, 2);
    const auto report = Audit(t, bk);
    std::set<std::pair<ItemId, ItemId>> known;
    for (const auto& e : bk.entries) {
      for (const auto& p : MCombinations(e.items, 2)) known.insert({p.ids()[0], p.ids()[1]});
    }
    std::size_t expected_total = 0;
    std::set<std::size_t> expected_clusters, audited_clusters;
    for (std::size_t i = 0; i < t.clusters.size(); ++i) {
      std::map<std::size_t, std::set<std::pair<ItemId, std::size_t>>> per_chunk;
      for (const auto& cv : testing::BruteForceCovers(t.clusters[i])) {
        for (ItemId y : cv.covered) {
          if (known.count({std::min(y, cv.x), std::max(y, cv.x)})) {
            per_chunk[cv.target_chunk].insert({cv.x, cv.prev_chunk});
            expected_clusters.insert(i);
          }
        }
      }
      std::size_t mx = 0;
      for (const auto& [j, s] : per_chunk) mx = std::max(mx, s.size());
      expected_total += mx;
      if (report.per_cluster[i].max_breach > 0) audited_clusters.insert(i);
    }
    const std::string tag = "dataset " + std::to_string(trial) + ": ";
    c.Expect(report.total_vulnerable_records == expected_total,
             tag + "total " + std::to_string(report.total_vulnerable_records) +
                 " vs " + std::to_string(expected_total));
    c.Expect(audited_clusters == expected_clusters,
             tag + "breached clusters differ from clusters with a known cover pair");
    total_sum += expected_total;
    cluster_sum += expected_clusters.size();
  }
  if (c.out.pass) {
    c.out.detail = "20 datasets, totals match (sum " + std::to_string(total_sum) +
                   "), breached clusters match (sum " + std::to_string(cluster_sum) + ")";
  }
  return c.out;
}

std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j < idx.size() && v[idx[j]] == v[idx[i]]) ++j;
    for (std::size_t q = i; q < j; ++q) r[idx[q]] = (i + j - 1) / 2.0 + 1;
    i = j;
  }
  return r;
}

double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = Ranks(x), ry = Ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i] / n;
    my += ry[i] / n;
  }
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0;
  return sxy / std::sqrt(sxx * syy);
}

Outcome OrderingAndTrend() {
  const auto start = Clock::now();
  Checker c;
  const std::vector<std::size_t> sizes{6, 12, 25, 50};
  std::vector<std::string> lexicon;
  for (int i = 0; i < 100; ++i) lexicon.push_back("ext" + std::to_string(i));
  double rho_sum = 0;
  std::ostringstream table;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SyntheticOptions opt;
    opt.records = 10000;
    opt.seed = seed;
    const Dataset d = GenerateZipfDataset(opt);
    ExperimentConfig config;
    config.max_cluster_sizes = sizes;
    config.seed = seed;
    config.record_timing = false;
    std::map<AttackerClass, std::vector<std::size_t>> totals;
    for (auto a : {AttackerClass::kWeak, AttackerClass::kModerate, AttackerClass::kStrong}) {
      config.attacker = a;
      for (const auto& p : RunSweep(config, d, lexicon)) {
        c.Expect(!p.row.error, "sweep error: " + p.row.error.value_or(""));
        totals[a].push_back(p.row.total);
      }
    }
    const auto& w = totals[AttackerClass::kWeak];
    const auto& mo = totals[AttackerClass::kModerate];
    const auto& s = totals[AttackerClass::kStrong];
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      xs.push_back(static_cast<double>(sizes[i]));
      ys.push_back(static_cast<double>(s[i]));
      c.Expect(w[i] <= mo[i] && mo[i] <= s[i],
               "seed " + std::to_string(seed) + " size " + std::to_string(sizes[i]) +
                   ": weak " + std::to_string(w[i]) + ", moderate " +
                   std::to_string(mo[i]) + ", strong " + std::to_string(s[i]));
    }
    const double rho = Spearman(xs, ys);
    rho_sum += rho;
    table << " seed" << seed << "[";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      table << (i ? " " : "") << w[i] << "/" << mo[i] << "/" << s[i];
    }
    table << "]";
  }
  const double rho = rho_sum / 5;
  c.Expect(rho >= 0.9, "mean Spearman rho " + std::to_string(rho));
  const double secs = Seconds(start);
  c.Expect(secs < 120.0, "took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s.precision(3);
  s << "mean rho " << rho << ", " << secs << " s, weak/moderate/strong per size 6,12,25,50:"
    << table.str();
  if (c.out.pass) {
    c.out.detail = s.str();
  } else {
    c.out.detail += "; " + s.str();
  }
  return c.out;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome Determinism() {
  Checker c;
  const fs::path dir = fs::temp_directory_path() / "disassoc_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  SyntheticOptions opt;
  opt.records = 3000;
  opt.seed = 11;
  const Dataset d = GenerateZipfDataset(opt);
  {
    std::ofstream out(dir / "data.txt");
    WriteTransactions(d, out);
    std::ofstream lex(dir / "lexicon.txt");
    for (int i = 0; i < 50; ++i) lex << "ext" << i << '\n';
  }
  std::size_t files = 0;
  for (auto a : {AttackerClass::kStrong, AttackerClass::kModerate, AttackerClass::kWeak}) {
    const std::string name(AttackerClassName(a));
    std::string first_knowledge;
    for (int run = 0; run < 2; ++run) {
      ExperimentConfig config;
      config.attacker = a;
      config.seed = 99;
      config.max_cluster_sizes = {6, 12, 25, 50};
      config.input_path = dir / "data.txt";
      config.lexicon_path = dir / "lexicon.txt";
      config.output_dir = dir / (name + std::to_string(run));
      config.record_timing = false;
      RunExperiment(config);

      const Dataset parsed = ParseTransactions(config.input_path);
      const auto lexicon = ReadLexicon(config.lexicon_path, parsed.vocabulary);
      BackgroundKnowledge bk;
      if (a == AttackerClass::kStrong) {
        bk = GenerateStrong(parsed, DetectAllCovers(Disassociate(parsed, 3, 2, 25)), 2);
      } else if (a == AttackerClass::kModerate) {
        bk = GenerateModerate(parsed, 2, DefaultModerateZ(parsed, 2), 99);
      } else {
        bk = GenerateWeak(parsed, lexicon, 10, 10, 2, 99);
      }
      std::ostringstream text;
      WriteKnowledge(bk, parsed.vocabulary, text);
      if (run == 0) {
        first_knowledge = text.str();
      } else {
        c.Expect(text.str() == first_knowledge, name + ": knowledge differs");
        ++files;
      }
    }
    for (const auto& entry : fs::directory_iterator(dir / (name + "0"))) {
      const fs::path other = dir / (name + "1") / entry.path().filename();
      c.Expect(fs::exists(other) && Slurp(entry.path()) == Slurp(other),
               name + ": " + entry.path().filename().string() + " differs");
      ++files;
    }
  }
  fs::remove_all(dir);
  if (c.out.pass) {
    c.out.detail = std::to_string(files) + " file pairs byte-identical (knowledge, reports, sweep CSV)";
  }
  return c.out;
}

}  // namespace
}  // namespace disassoc

int main() {
  using disassoc::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 covered-pair scenario", disassoc::CoveredPair},
      {"2 health-search scenario", disassoc::HealthSearch},
      {"3 anonymizer soundness", disassoc::AnonymizerSoundness},
      {"4 oracle consistency", disassoc::OracleConsistency},
      {"5 strong-attacker equivalence", disassoc::StrongEquivalence},
      {"6 ordering and trend", disassoc::OrderingAndTrend},
      {"7 determinism", disassoc::Determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
