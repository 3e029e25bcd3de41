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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "disassoc/anonymizer.h"
#include "disassoc/breach_audit.h"
#include "disassoc/cover_detector.h"
#include "disassoc/errors.h"
#include "test_util.h"

namespace disassoc {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;
using testing::kE;

TEST(ReconstructionTest, SingleChunk) {
  Cluster c = testing::CoveredPairCluster();
  c.chunks.pop_back();
  const auto recs = EnumerateReconstructions(c, {});
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].valid);
  EXPECT_EQ(CountAlignments(c), 1u);
}

TEST(ReconstructionTest, CoveredPairSixAlignmentsFiveValid) {
  const Cluster c = testing::CoveredPairCluster();
  const auto recs = EnumerateReconstructions(c, {2, 2, 1000});
  ASSERT_EQ(recs.size(), 6u);
  EXPECT_EQ(std::count_if(recs.begin(), recs.end(),
                          [](const auto& r) { return r.valid; }),
            5);
  // The invalid one puts e next to both abc rows.
  for (const auto& r : recs) {
    const std::size_t ec = Support(Itemset{kC, kE}, r.records);
    EXPECT_EQ(r.valid, ec < 2);
  }
  std::set<std::vector<Itemset>> distinct;
  for (const auto& r : recs) distinct.insert(r.records);
  EXPECT_EQ(distinct.size(), 6u);
}

TEST(ReconstructionTest, LimitRaisesInfeasible) {
  const Cluster c = testing::CoveredPairCluster();
  try {
    EnumerateReconstructions(c, {2, 2, 5});
    FAIL();
  } catch (const InfeasibleEnumeration& e) {
    EXPECT_EQ(e.count(), 6u);
    EXPECT_EQ(e.limit(), 5u);
  }
}

TEST(ReconstructionTest, TooManySubRecords) {
  Cluster c = testing::CoveredPairCluster();
  c.record_count = 2;
  EXPECT_THROW(CountAlignments(c), DataError);
}

TEST(OracleTest, CoveredPair) {
  const auto v = BreachOracle(testing::CoveredPairCluster(), Itemset{kC, kE},
                              {2, 2, 1000});
  EXPECT_TRUE(v.vulnerable);
  EXPECT_TRUE(v.linked_items.Includes(Itemset{kA, kB}));
  EXPECT_EQ(v.reconstructions, 6u);
  EXPECT_EQ(v.valid_reconstructions, 5u);
  EXPECT_TRUE(v.deanonymized);
}

TEST(OracleTest, FrequentPairInsideOneChunk) {
  const auto v = BreachOracle(testing::CoveredPairCluster(), Itemset{kA, kB},
                              {2, 2, 1000});
  EXPECT_FALSE(v.vulnerable);
  EXPECT_FALSE(v.deanonymized);
}

TEST(OracleTest, EmptyItemset) {
  EXPECT_THROW(BreachOracle(testing::CoveredPairCluster(), Itemset{}, {}),
               ParameterError);
}

// Random two-chunk cluster with three and two sub-records: the alignment
// count equals a plain permutation count with duplicates removed.
TEST(ReconstructionProperties, AlignmentCountMatchesPermutations) {
  SeededRng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng.UniformBelow(3);
    Cluster c;
    c.record_count = n;
    RecordChunk a{Itemset{0, 1}, {}}, b{Itemset{2, 3}, {}};
    for (int i = 0; i < 3; ++i) {
      a.sub_records.push_back(UnrankCombination(Itemset{0, 1}, 1 + rng.UniformBelow(2), 0));
    }
    for (int i = 0; i < 2; ++i) {
      b.sub_records.push_back(i == 0 || rng.UniformBelow(2) ? Itemset{2} : Itemset{2, 3});
    }
    std::sort(a.sub_records.begin(), a.sub_records.end());
    std::sort(b.sub_records.begin(), b.sub_records.end());
    c.chunks = {a, b};
    auto rows = b.sub_records;
    rows.resize(n);
    std::sort(rows.begin(), rows.end());
    std::set<std::vector<Itemset>> perms;
    do {
      perms.insert(rows);
    } while (std::next_permutation(rows.begin(), rows.end()));
    EXPECT_EQ(CountAlignments(c), perms.size());
    EXPECT_EQ(EnumerateReconstructions(c, {}).size(), perms.size());
  }
}

// Random tiny clusters out of the anonymizer: the enumeration matches the
// independent permutation-based enumerator (records and validity), and the
// original data is always among the valid reconstructions.
TEST(ReconstructionProperties, MatchesIndependentEnumerator) {
  SeededRng rng(43);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 150; ++trial) {
    const Dataset d = testing::RandomDataset(rng, {6, 6, 4});
    const std::size_t k = 2;
    const std::size_t m = 1 + rng.UniformBelow(3);
    const Cluster c = VerticalPartition(d.records, k, m);
    if (c.chunks.size() < 2 || CountAlignments(c) > 2000) continue;
    ++checked;
    const auto recs = EnumerateReconstructions(c, {k, m, 100000});
    std::set<testing::SlowReconstruction> fast;
    for (const auto& r : recs) fast.insert({r.records, r.valid});
    EXPECT_EQ(fast.size(), recs.size());
    EXPECT_EQ(fast, testing::SlowReconstructions(c, k, m));

    Itemset domain;
    for (const auto& ch : c.chunks) domain = domain.Union(ch.items);
    std::vector<Itemset> original;
    for (const auto& r : d.records) original.push_back(r.items.Intersect(domain));
    std::sort(original.begin(), original.end());
    bool found = false;
    for (const auto& r : recs) {
      auto rows = r.records;
      std::sort(rows.begin(), rows.end());
      found = found || (r.valid && rows == original);
    }
    EXPECT_TRUE(found) << "trial " << trial;
  }
  EXPECT_GE(checked, 100);
}

}  // namespace
}  // namespace disassoc
