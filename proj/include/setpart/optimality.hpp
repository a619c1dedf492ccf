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

// Verifier for local 2-optimality: a partition is locally 2-optimal when no
// relocation of one element, or of two distinct elements (same side or
// opposite sides), strictly decreases |S1 - S2|.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "setpart/instance.hpp"
#include "setpart/value.hpp"

namespace setpart {

struct MoveWitness {
  std::vector<std::size_t> moved;  // one or two original indices, ascending
  Value resulting_diff;            // |S1 - S2| after the move
};

struct Verdict {
  bool is_locally_2opt = true;
  std::optional<MoveWitness> witness;
};

// O(N^2). Moving x_e off side 1 changes D = S1 - S2 by -2 x_e, moving it off
// side 2 by +2 x_e. The witness is the most improving move; among equally
// good moves the first in enumeration order wins (singles in index order,
// then pairs in lexicographic order).
inline Verdict is_locally_2opt(std::span<const Value> values, const Partition& partition) {
  const std::size_t n = values.size();
  validate_partition(n, partition.side1, partition.side2);

  std::vector<Value> delta(n);
  for (std::size_t i : partition.side1) delta[i] = -twice(values[i]);
  for (std::size_t i : partition.side2) delta[i] = twice(values[i]);
  const Value d = signed_difference<Value>(values, partition);

  Verdict verdict;
  Value best = abs_value(d);
  auto offer = [&](Value after, std::initializer_list<std::size_t> moved) {
    if (!(after < best)) return false;
    best = after;
    verdict.is_locally_2opt = false;
    verdict.witness = MoveWitness{moved, std::move(after)};
    return best == 0;  // nothing can beat an exact balance
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (offer(abs_value(Value(d + delta[i])), {i})) return verdict;
  }
  Value partial;
  for (std::size_t i = 0; i < n; ++i) {
    partial = d + delta[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (offer(abs_value(Value(partial + delta[j])), {i, j})) return verdict;
    }
  }
  return verdict;
}

inline Verdict is_locally_2opt(const Instance& instance, const Partition& partition) {
  return is_locally_2opt(std::span<const Value>(instance.values), partition);
}

inline constexpr std::size_t kBruteForceCheckLimit = 12;

// Literal reading of the optimality definition, for cross-checking
// is_locally_2opt: every ordered choice of x1, x2 from X plus the extra zero
// element, with the moved sums recomputed from side-membership indicators.
// Choosing the same element twice is skipped (it is not a relocation). The
// witness carries the smallest reachable difference.
inline Verdict brute_force_2opt_oracle(const Instance& instance, const Partition& partition) {
  const std::size_t n = instance.size();
  if (n > kBruteForceCheckLimit) {
    throw LimitError("brute-force 2-opt check supports at most " +
                     std::to_string(kBruteForceCheckLimit) + " elements, got " + std::to_string(n));
  }
  validate_partition(n, partition.side1, partition.side2);

  // Element n is the zero element, a member of neither side.
  std::vector<int> membership(n + 1, 0);
  for (std::size_t i : partition.side1) membership[i] = 1;
  for (std::size_t i : partition.side2) membership[i] = 2;
  auto value = [&](std::size_t e) { return e == n ? Value(0) : instance.values[e]; };
  auto in = [&](std::size_t e, int side) { return membership[e] == side ? value(e) : Value(0); };

  Value s1 = 0;
  Value s2 = 0;
  for (std::size_t i = 0; i < n; ++i) (membership[i] == 1 ? s1 : s2) += instance.values[i];
  const Value current = abs_value(Value(s1 - s2));

  Verdict verdict;
  Value best = current;
  for (std::size_t e1 = 0; e1 <= n; ++e1) {
    for (std::size_t e2 = 0; e2 <= n; ++e2) {
      if (e1 == e2 && e1 != n) continue;
      const Value t1 = s1 - in(e1, 1) - in(e2, 1) + in(e1, 2) + in(e2, 2);
      const Value t2 = s2 - in(e1, 2) - in(e2, 2) + in(e1, 1) + in(e2, 1);
      Value after = abs_value(Value(t1 - t2));
      if (after < best) {
        best = after;
        MoveWitness w;
        for (std::size_t e : {std::min(e1, e2), std::max(e1, e2)}) {
          if (e != n) w.moved.push_back(e);
        }
        w.resulting_diff = std::move(after);
        verdict = Verdict{false, std::move(w)};
      }
    }
  }
  return verdict;
}

}  // namespace setpart
