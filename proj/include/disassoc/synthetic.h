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

#ifndef DISASSOC_SYNTHETIC_H_
#define DISASSOC_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>

#include "disassoc/core_model.h"

namespace disassoc {

// Click-stream-like transactions: record lengths are 1 + Geometric with the
// requested mean, items are drawn without repetition from a Zipf law over
// `items` ranks. Item labels are "i<rank>".
struct SyntheticOptions {
  std::size_t records = 10000;
  std::size_t items = 500;
  double zipf_exponent = 1.0;
  double mean_length = 2.5;
  std::size_t max_length = 40;
  std::uint64_t seed = 1;
};

Dataset GenerateZipfDataset(const SyntheticOptions& options);

}  // namespace disassoc

#endif  // DISASSOC_SYNTHETIC_H_
