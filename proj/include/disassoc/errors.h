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

#ifndef DISASSOC_ERRORS_H_
#define DISASSOC_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace disassoc {

// Invalid argument to an operation (k < 2, m = 0, z >= n, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or unusable input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when reconstruction enumeration would exceed the caller's limit.
class InfeasibleEnumeration : public std::runtime_error {
 public:
  InfeasibleEnumeration(std::uint64_t count, std::uint64_t limit)
      : std::runtime_error("enumeration of " + std::to_string(count) +
                           " alignments exceeds limit " +
                           std::to_string(limit)),
        count_(count),
        limit_(limit) {}

  std::uint64_t count() const { return count_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t count_;
  std::uint64_t limit_;
};

}  // namespace disassoc

#endif  // DISASSOC_ERRORS_H_
