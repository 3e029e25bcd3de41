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

#include "disassoc/synthetic.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "disassoc/errors.h"
#include "disassoc/random.h"

namespace disassoc {

Dataset GenerateZipfDataset(const SyntheticOptions& options) {
  if (options.records == 0 || options.items == 0) {
    throw ParameterError("synthetic dataset needs records and items");
  }
  if (options.mean_length < 1.0) {
    throw ParameterError("mean record length must be at least 1");
  }
  std::vector<double> cdf(options.items);
  double acc = 0.0;
  for (std::size_t r = 0; r < options.items; ++r) {
    acc += 1.0 / std::pow(static_cast<double>(r + 1), options.zipf_exponent);
    cdf[r] = acc;
  }
  for (double& c : cdf) c /= acc;

  SeededRng rng(options.seed);
  const double stop = 1.0 / options.mean_length;
  const std::size_t cap = std::min(options.max_length, options.items);

  Dataset dataset;
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < options.records; ++i) {
    std::size_t length = 1;
    while (length < cap && rng.UniformUnit() >= stop) ++length;
    ranks.clear();
    while (ranks.size() < length) {
      const double u = rng.UniformUnit();
      const auto rank = static_cast<std::size_t>(
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      const std::size_t clamped = std::min(rank, options.items - 1);
      if (std::find(ranks.begin(), ranks.end(), clamped) == ranks.end()) {
        ranks.push_back(clamped);
      }
    }
    std::vector<ItemId> ids;
    for (std::size_t rank : ranks) {
      ids.push_back(dataset.vocabulary.Intern("i" + std::to_string(rank)));
    }
    dataset.records.push_back({Itemset(std::move(ids)), i});
  }
  return dataset;
}

}  // namespace disassoc
