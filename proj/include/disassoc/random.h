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

#ifndef DISASSOC_RANDOM_H_
#define DISASSOC_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace disassoc {

// Reproducible randomness. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Bounded draws and shuffles are
// implemented here rather than with <random> distributions, which differ
// between standard libraries:
//
//   UniformBelow(n): draw 64-bit words w, reject w >= 2^64 - (2^64 mod n),
//                    return w mod n.
//   Sample(n, c):    partial Fisher-Yates over [0, n); step i swaps slot i
//                    with slot i + UniformBelow(n - i).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Uniform real in [0, 1) with 53 bits of precision.
  double UniformUnit();
  // `count` distinct values of [0, n), in draw order.
  std::vector<std::size_t> Sample(std::size_t n, std::size_t count);

 private:
  std::mt19937_64 engine_;
};

}  // namespace disassoc

#endif  // DISASSOC_RANDOM_H_
