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

// Classical O(N log N) heuristics used as reference points. Both work on
// magnitudes and then move originally negative elements across, which leaves
// S1 - S2 unchanged.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string_view>
#include <utility>
#include <vector>

#include "setpart/instance.hpp"
#include "setpart/value.hpp"

namespace setpart {

enum class BaselineMethod { greedy, karmarkar_karp };

inline constexpr std::string_view to_string(BaselineMethod m) {
  return m == BaselineMethod::greedy ? "greedy" : "karmarkar-karp";
}

struct BaselineReport {
  BaselineMethod method = BaselineMethod::greedy;
  Partition partition;
  Value final_diff;
};

namespace detail {

// Original indices by magnitude descending, index ascending.
inline std::vector<std::size_t> descending_order(const std::vector<Value>& magnitudes) {
  std::vector<std::size_t> order(magnitudes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return magnitudes[b] < magnitudes[a]; });
  return order;
}

inline std::vector<Value> magnitudes_of(const Instance& instance) {
  std::vector<Value> m;
  m.reserve(instance.size());
  for (const Value& v : instance.values) m.push_back(abs_value(v));
  return m;
}

// in_side1 is the magnitude assignment; negatives switch sides.
inline Partition restore_signs(const Instance& instance, const std::vector<char>& in_side1) {
  Partition p;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const bool side1 = static_cast<bool>(in_side1[i]) != (instance.values[i] < 0);
    (side1 ? p.side1 : p.side2).push_back(i);
  }
  return p;
}

}  // namespace detail

// Largest magnitude first, each onto the currently lighter side (side 1 on ties).
inline BaselineReport greedy_partition(const Instance& instance) {
  const auto magnitudes = detail::magnitudes_of(instance);
  std::vector<char> in_side1(instance.size(), 0);
  Value s1 = 0;
  Value s2 = 0;
  for (std::size_t i : detail::descending_order(magnitudes)) {
    if (s1 <= s2) {
      in_side1[i] = 1;
      s1 += magnitudes[i];
    } else {
      s2 += magnitudes[i];
    }
  }
  return {BaselineMethod::greedy, detail::restore_signs(instance, in_side1), abs_value(Value(s1 - s2))};
}

// Differencing: replace the two largest numbers a >= b by a - b until one
// remains. Each replacement records "b sits opposite a", and the resulting
// forest is two-coloured from the final survivor (side 1).
inline BaselineReport karmarkar_karp(const Instance& instance) {
  const std::size_t n = instance.size();
  BaselineReport report{BaselineMethod::karmarkar_karp, {}, Value(0)};
  if (n == 0) return report;

  const auto magnitudes = detail::magnitudes_of(instance);
  // Node ids: 0..n-1 are originals, n.. are differences. Each difference
  // node inherits the colour of its larger operand; children[id] lists
  // (child, opposite?) edges.
  std::vector<std::vector<std::pair<std::size_t, bool>>> children(n);
  struct Item {
    Value magnitude;
    std::size_t id;
  };
  // Largest magnitude first; equal magnitudes by lower id.
  auto lower_priority = [](const Item& a, const Item& b) {
    if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
    return a.id > b.id;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(lower_priority)> heap(lower_priority);
  for (std::size_t i = 0; i < n; ++i) heap.push({magnitudes[i], i});

  while (heap.size() > 1) {
    Item a = heap.top();
    heap.pop();
    Item b = heap.top();
    heap.pop();
    const std::size_t id = children.size();
    children.push_back({{a.id, false}, {b.id, true}});
    heap.push({a.magnitude - b.magnitude, id});
  }
  report.final_diff = heap.top().magnitude;

  std::vector<char> in_side1(n, 0);
  std::vector<std::pair<std::size_t, bool>> stack{{heap.top().id, true}};
  while (!stack.empty()) {
    const auto [id, side1] = stack.back();
    stack.pop_back();
    if (id < n) {
      in_side1[id] = side1;
      continue;
    }
    for (const auto& [child, opposite] : children[id]) stack.emplace_back(child, side1 != opposite);
  }
  report.partition = detail::restore_signs(instance, in_side1);
  return report;
}

}  // namespace setpart
