// Copyright 2026 The setpart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "setpart/value.hpp"

namespace setpart {

// Raised by exact methods asked to run above their configured size limit.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The input multiset. Duplicates, zeros and negative values are all legal,
// and so is the empty instance.
struct Instance {
  std::vector<Value> values;
  std::optional<std::string> id;
  // Every value is a mantissa over 10^scale_digits.
  unsigned scale_digits = 0;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  Value scale() const { return pow10(scale_digits); }
};

// A two-way partition over original indices (0-based, ascending).
struct Partition {
  std::vector<std::size_t> side1;
  std::vector<std::size_t> side2;

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Throws std::invalid_argument unless side1 and side2 are disjoint, in range
// and together cover {0, ..., n-1}.
inline void validate_partition(std::size_t n, std::span<const std::size_t> side1,
                               std::span<const std::size_t> side2) {
  std::vector<char> seen(n, 0);
  auto mark = [&](std::span<const std::size_t> side) {
    for (std::size_t i : side) {
      if (i >= n) throw std::invalid_argument("index " + std::to_string(i + 1) + " out of range");
      if (seen[i]) throw std::invalid_argument("index " + std::to_string(i + 1) + " listed twice");
      seen[i] = 1;
    }
  };
  mark(side1);
  mark(side2);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw std::invalid_argument("partition does not cover every index");
  }
}

// Complement of side1 within {0, ..., n-1}; validates side1 on the way.
inline Partition partition_from_side1(std::size_t n, std::vector<std::size_t> side1) {
  std::vector<char> in1(n, 0);
  for (std::size_t i : side1) {
    if (i >= n) throw std::invalid_argument("index " + std::to_string(i + 1) + " out of range");
    if (in1[i]) throw std::invalid_argument("index " + std::to_string(i + 1) + " listed twice");
    in1[i] = 1;
  }
  Partition p;
  std::sort(side1.begin(), side1.end());
  p.side1 = std::move(side1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in1[i]) p.side2.push_back(i);
  }
  return p;
}

// Signed S1 - S2 of a partition, computed from scratch.
template <ExactNumber Num>
Num signed_difference(std::span<const Num> values, const Partition& p) {
  Num d(0);
  for (std::size_t i : p.side1) d = d + values[i];
  for (std::size_t i : p.side2) d = d - values[i];
  return d;
}

inline Value signed_difference(const Instance& instance, const Partition& p) {
  return signed_difference<Value>(instance.values, p);
}

}  // namespace setpart
