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

// Exact minimum |S1 - S2| for small instances: exhaustive enumeration and
// Horowitz-Sahni meet-in-the-middle. Both minimise |sum_n s_n x_n| over sign
// vectors s, so signed inputs need no preprocessing.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setpart/instance.hpp"
#include "setpart/value.hpp"

namespace setpart {

inline constexpr std::size_t kEnumerationLimit = 24;
inline constexpr std::size_t kMeetInTheMiddleLimit = 40;

struct OracleResult {
  Value optimal_diff;
  std::vector<std::size_t> witness_side1;  // ascending original indices
};

namespace detail {

// True when every partial signed sum fits comfortably in int64.
inline bool fits_int64(std::span<const Value> values) {
  Value total = 0;
  for (const Value& v : values) total += abs_value(v);
  return total < (Value(1) << 61);
}

template <typename Acc>
std::vector<Acc> to_acc(std::span<const Value> values) {
  std::vector<Acc> out;
  out.reserve(values.size());
  for (const Value& v : values) out.push_back(static_cast<Acc>(v));
  return out;
}

template <typename Acc>
Acc abs_acc(const Acc& x) {
  return x < 0 ? Acc(-x) : x;
}

// Mask bit (n - 1 - i) set means index i goes to side 2; index 0 is pinned to
// side 1. Numeric mask order is then lexicographic order of sign vectors,
// and the smallest minimising mask is kept.
template <typename Acc>
OracleResult enumerate(const std::vector<Acc>& x) {
  const std::size_t n = x.size();
  Acc sum = 0;
  for (const Acc& v : x) sum += v;
  std::vector<Acc> doubled;
  doubled.reserve(n);
  for (const Acc& v : x) doubled.push_back(v + v);

  Acc best = abs_acc(sum);
  std::uint64_t best_mask = 0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int bit = std::countr_zero(k);
    gray ^= std::uint64_t{1} << bit;
    const std::size_t index = n - 1 - static_cast<std::size_t>(bit);
    if (gray >> bit & 1) {
      sum -= doubled[index];
    } else {
      sum += doubled[index];
    }
    const Acc diff = abs_acc(sum);
    if (diff < best || (diff == best && gray < best_mask)) {
      best = diff;
      best_mask = gray;
    }
  }
  OracleResult result{Value(best), {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || !(best_mask >> (n - 1 - i) & 1)) result.witness_side1.push_back(i);
  }
  return result;
}

// sums[m] = sum of x_j over the half, negated where bit j of m is set.
template <typename Acc>
std::vector<Acc> half_sums(std::span<const Acc> x) {
  const std::size_t count = std::size_t{1} << x.size();
  std::vector<Acc> sums(count);
  Acc base = 0;
  for (const Acc& v : x) base += v;
  sums[0] = base;
  for (std::size_t m = 1; m < count; ++m) {
    const int bit = std::countr_zero(m);
    sums[m] = sums[m & (m - 1)] - x[bit] - x[bit];
  }
  return sums;
}

template <typename Acc>
OracleResult meet_in_the_middle(const std::vector<Acc>& x) {
  const std::size_t n = x.size();
  const std::size_t h = n / 2;
  const std::span<const Acc> all(x);
  const auto left = half_sums<Acc>(all.first(h));
  const auto right_sums = half_sums<Acc>(all.subspan(h));

  std::vector<std::pair<Acc, std::uint64_t>> right;
  right.reserve(right_sums.size());
  for (std::uint64_t m = 0; m < right_sums.size(); ++m) right.emplace_back(right_sums[m], m);
  std::sort(right.begin(), right.end());

  bool have = false;
  Acc best = 0;
  std::uint64_t best_left = 0;
  std::uint64_t best_right = 0;
  auto consider = [&](std::uint64_t lm, const std::pair<Acc, std::uint64_t>& r) {
    const Acc diff = abs_acc(Acc(left[lm] + r.first));
    if (!have || diff < best) {
      have = true;
      best = diff;
      best_left = lm;
      best_right = r.second;
    }
  };
  for (std::uint64_t lm = 0; lm < left.size(); ++lm) {
    const Acc want = -left[lm];
    auto it = std::lower_bound(right.begin(), right.end(), want,
                               [](const auto& r, const Acc& v) { return r.first < v; });
    if (it != right.end()) consider(lm, *it);
    if (it != right.begin()) consider(lm, *std::prev(it));
    if (have && best == 0) break;
  }

  // Witness in canonical orientation: index 0 on side 1.
  std::vector<bool> negative(n);
  for (std::size_t i = 0; i < h; ++i) negative[i] = best_left >> i & 1;
  for (std::size_t i = h; i < n; ++i) negative[i] = best_right >> (i - h) & 1;
  const bool flip = n > 0 && negative[0];
  OracleResult result{Value(best), {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (negative[i] == flip) result.witness_side1.push_back(i);
  }
  return result;
}

inline void check_limit(std::size_t n, std::size_t limit, const char* method) {
  if (n > limit) {
    throw LimitError(std::string(method) + " oracle supports at most " + std::to_string(limit) +
                     " elements, got " + std::to_string(n));
  }
}

}  // namespace detail

// Brute force over all 2^(N-1) distinct partitions. The witness is the
// lexicographically smallest minimising sign vector with s_1 = +1.
inline OracleResult optimal_diff_enum(const Instance& instance, std::size_t limit = kEnumerationLimit) {
  detail::check_limit(instance.size(), std::min(limit, kEnumerationLimit), "enumeration");
  if (instance.empty()) return {};
  const std::span<const Value> values(instance.values);
  if (detail::fits_int64(values)) return detail::enumerate(detail::to_acc<std::int64_t>(values));
  return detail::enumerate(detail::to_acc<Value>(values));
}

// O(2^(N/2) N): enumerate signed sums of each half, sort the right half, and
// match every left sum against its closest negation on the right.
inline OracleResult optimal_diff_mitm(const Instance& instance,
                                      std::size_t limit = kMeetInTheMiddleLimit) {
  detail::check_limit(instance.size(), std::min(limit, kMeetInTheMiddleLimit), "meet-in-the-middle");
  if (instance.empty()) return {};
  const std::span<const Value> values(instance.values);
  if (detail::fits_int64(values)) return detail::meet_in_the_middle(detail::to_acc<std::int64_t>(values));
  return detail::meet_in_the_middle(detail::to_acc<Value>(values));
}

}  // namespace setpart
