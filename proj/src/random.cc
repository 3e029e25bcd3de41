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

#include "disassoc/random.h"

#include <numeric>
#include <utility>

#include "disassoc/errors.h"

namespace disassoc {

std::uint64_t SeededRng::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw ParameterError("UniformBelow bound must be positive");
  // 2^64 mod bound, computed without overflow.
  const std::uint64_t excess = (0 - bound) % bound;
  const std::uint64_t limit = 0 - excess;  // 0 means "accept everything"
  while (true) {
    const std::uint64_t w = engine_();
    if (excess == 0 || w < limit) return w % bound;
  }
}

double SeededRng::UniformUnit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> SeededRng::Sample(std::size_t n, std::size_t count) {
  if (count > n) throw ParameterError("cannot sample more values than exist");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(UniformBelow(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace disassoc
