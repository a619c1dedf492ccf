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

// Local 2-opt search for two-way number partitioning.
//
// The input is padded with N zeros and reduced to magnitudes plus per-element
// sign indicators. The 2N magnitudes start in an equal-sized partition; each
// traverse walks the heavier side in descending magnitude order and swaps the
// current element with the lighter-side element that most decreases
// |S1 - S2|. A swap that flips the sign of S1 - S2 starts a new traverse.
// When a traverse ends without a flip, originally negative elements are moved
// to the opposite side, which restores their signs without changing S1 - S2.
//
// The result admits no move of one or two elements that strictly decreases
// the absolute difference (see optimality.hpp for the independent check).

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "setpart/instance.hpp"
#include "setpart/random.hpp"
#include "setpart/value.hpp"

namespace setpart {

enum class Side : std::uint8_t { one = 1, two = 2 };

constexpr Side opposite(Side s) { return s == Side::one ? Side::two : Side::one; }

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1 };

enum class InitPolicy { round_robin_descending, first_half, seeded_random };
enum class TieBreak { prefer_no_sign_flip, prefer_smallest };
enum class Engine { reference, scan };

struct SolverConfig {
  InitPolicy init_policy = InitPolicy::round_robin_descending;
  // Required by InitPolicy::seeded_random, ignored otherwise.
  std::optional<std::uint64_t> seed;
  TieBreak tie_break = TieBreak::prefer_no_sign_flip;
  Engine engine = Engine::scan;
  bool collect_trace = false;
};

inline constexpr std::string_view to_string(InitPolicy p) {
  switch (p) {
    case InitPolicy::round_robin_descending: return "round-robin";
    case InitPolicy::first_half: return "first-half";
    case InitPolicy::seeded_random: return "random";
  }
  return "?";
}

inline constexpr std::string_view to_string(TieBreak t) {
  return t == TieBreak::prefer_no_sign_flip ? "no-flip" : "smallest";
}

inline constexpr std::string_view to_string(Engine e) {
  return e == Engine::reference ? "reference" : "scan";
}

inline constexpr std::size_t kZeroPad = std::numeric_limits<std::size_t>::max();

template <ExactNumber Num>
struct ExtendedEntry {
  Num magnitude{0};
  // Original index, or kZeroPad for one of the N padding zeros.
  std::size_t origin = kZeroPad;

  bool is_pad() const { return origin == kZeroPad; }
};

// The 2N-element preprocessed view of an instance. Entries are sorted by
// magnitude descending, then original index ascending, padding zeros last.
// Positions into `entries` are the "extended positions" used everywhere below.
template <ExactNumber Num>
struct ExtendedState {
  std::vector<ExtendedEntry<Num>> entries;
  std::vector<Sign> indicators;  // per original index

  std::size_t original_size() const { return indicators.size(); }
  std::size_t size() const { return entries.size(); }
  const Num& magnitude(std::size_t pos) const { return entries[pos].magnitude; }
};

template <ExactNumber Num>
ExtendedState<Num> build_extended(std::span<const Num> values) {
  const std::size_t n = values.size();
  ExtendedState<Num> ext;
  ext.indicators.reserve(n);
  ext.entries.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Num& x = values[i];
    ext.indicators.push_back(x > Num(0) ? Sign::positive : x < Num(0) ? Sign::negative : Sign::zero);
    ext.entries.push_back({abs_value(x), i});
  }
  for (std::size_t i = 0; i < n; ++i) ext.entries.push_back({Num(0), kZeroPad});
  std::stable_sort(ext.entries.begin(), ext.entries.end(), [](const auto& a, const auto& b) {
    if (a.magnitude != b.magnitude) return b.magnitude < a.magnitude;
    return a.origin < b.origin;
  });
  return ext;
}

template <ExactNumber Num>
struct PartitionState {
  std::vector<Side> side;  // per extended position
  Num s1{0};
  Num s2{0};
  std::size_t swap_count = 0;
  std::size_t traverse_count = 0;
  // Signed S1 - S2: the initial value, then one entry per swap.
  std::optional<std::vector<Num>> diff_trace;

  Num difference() const { return s1 - s2; }
  // Only meaningful while s1 != s2.
  Side heavier() const { return s2 < s1 ? Side::one : Side::two; }
  Num heavy_surplus() const { return abs_value(difference()); }
};

template <ExactNumber Num>
PartitionState<Num> init_partition(const ExtendedState<Num>& ext, InitPolicy policy,
                                   std::optional<std::uint64_t> seed = std::nullopt) {
  const std::size_t total = ext.size();
  PartitionState<Num> state;
  state.side.assign(total, Side::two);
  switch (policy) {
    case InitPolicy::round_robin_descending:
      for (std::size_t pos = 0; pos < total; pos += 2) state.side[pos] = Side::one;
      break;
    case InitPolicy::first_half:
      std::fill_n(state.side.begin(), total / 2, Side::one);
      break;
    case InitPolicy::seeded_random: {
      if (!seed) throw std::invalid_argument("seeded_random initialisation requires a seed");
      std::fill_n(state.side.begin(), total / 2, Side::one);
      Rng rng(*seed);
      shuffle(state.side.begin(), state.side.end(), rng);
      break;
    }
  }
  for (std::size_t pos = 0; pos < total; ++pos) {
    if (state.side[pos] == Side::one) {
      state.s1 = state.s1 + ext.magnitude(pos);
    } else {
      state.s2 = state.s2 + ext.magnitude(pos);
    }
  }
  return state;
}

template <ExactNumber Num>
struct SwapCandidate {
  std::size_t pos_heavy = 0;
  std::size_t pos_light = 0;
  Num new_diff{0};  // |S_a - S_b| after the swap
  bool sign_flips = false;
};

namespace detail {

// Whether a lighter-side magnitude `challenger` should replace `incumbent`
// when both reach the same new difference. Equal magnitudes keep the earlier
// position, which is what a forward scan over positions does.
template <ExactNumber Num>
bool tie_prefers(TieBreak tie, const Num& challenger, const Num& incumbent) {
  return tie == TieBreak::prefer_no_sign_flip ? incumbent < challenger : challenger < incumbent;
}

}  // namespace detail

// Best swap partner for the heavier-side element at `pos`, found by scanning
// every lighter-side position. A partner x_b qualifies when
// 0 < x_a - x_b < S_a - S_b, i.e. exactly when the swap strictly decreases
// |S1 - S2|; the winner minimises |S_a - S_b - 2 x_a + 2 x_b|.
template <ExactNumber Num>
std::optional<SwapCandidate<Num>> find_best_swap(const ExtendedState<Num>& ext,
                                                 const PartitionState<Num>& state,
                                                 std::size_t pos,
                                                 TieBreak tie = TieBreak::prefer_no_sign_flip) {
  assert(state.s1 != state.s2);
  const Side heavy = state.side[pos];
  assert(heavy == state.heavier());
  const Num delta = state.heavy_surplus();
  const Num& xa = ext.magnitude(pos);
  // A partner with 2 x_b == target would balance the sums exactly.
  const Num target = twice(xa) - delta;

  std::optional<SwapCandidate<Num>> best;
  for (std::size_t q = 0; q < ext.size(); ++q) {
    if (state.side[q] == heavy) continue;
    const Num& xb = ext.magnitude(q);
    const Num gap = xa - xb;
    if (!(Num(0) < gap && gap < delta)) continue;
    const Num after = twice(xb) - target;
    const Num new_diff = abs_value(after);
    if (!best || new_diff < best->new_diff ||
        (new_diff == best->new_diff && detail::tie_prefers(tie, xb, ext.magnitude(best->pos_light)))) {
      best = SwapCandidate<Num>{pos, q, new_diff, after < Num(0)};
    }
  }
  return best;
}

// Exchanges the two positions and updates the sums:
//   S_a <- S_a - x_a + x_b,  S_b <- S_b - x_b + x_a.
template <ExactNumber Num>
void apply_swap(const ExtendedState<Num>& ext, PartitionState<Num>& state,
                const SwapCandidate<Num>& cand) {
  const Num& xa = ext.magnitude(cand.pos_heavy);
  const Num& xb = ext.magnitude(cand.pos_light);
  const Side heavy = state.side[cand.pos_heavy];
  assert(state.side[cand.pos_light] == opposite(heavy));
  Num& sa = heavy == Side::one ? state.s1 : state.s2;
  Num& sb = heavy == Side::one ? state.s2 : state.s1;
  sa = sa - xa + xb;
  sb = sb - xb + xa;
  std::swap(state.side[cand.pos_heavy], state.side[cand.pos_light]);
  ++state.swap_count;
  if (state.diff_trace) state.diff_trace->push_back(state.difference());
}

// Candidate search that scans every lighter-side element.
template <ExactNumber Num>
class ReferenceFinder {
 public:
  ReferenceFinder(const ExtendedState<Num>& ext, TieBreak tie) : ext_(&ext), tie_(tie) {}

  std::optional<SwapCandidate<Num>> find(const PartitionState<Num>& state, std::size_t pos) const {
    return find_best_swap(*ext_, state, pos, tie_);
  }
  void on_swap(const PartitionState<Num>&, const SwapCandidate<Num>&) {}

 private:
  const ExtendedState<Num>* ext_;
  TieBreak tie_;
};

// Candidate search over the merged descending array. Per side, an ordered
// set of extended positions is kept; since positions are sorted by
// magnitude, the best partner is one of the two lighter-side neighbours of
// the balancing target x_a - (S_a - S_b) / 2, located by binary search.
// Returns exactly what find_best_swap returns, in O(log N) per query.
template <ExactNumber Num>
class ScanIndex {
 public:
  ScanIndex(const ExtendedState<Num>& ext, const PartitionState<Num>& state, TieBreak tie)
      : ext_(&ext), tie_(tie) {
    for (std::size_t pos = 0; pos < ext.size(); ++pos) members(state.side[pos]).insert(pos);
  }

  std::optional<SwapCandidate<Num>> find(const PartitionState<Num>& state, std::size_t pos) const {
    assert(state.s1 != state.s2);
    const Side heavy = state.side[pos];
    const auto& light = members(opposite(heavy));
    const Num delta = state.heavy_surplus();
    const Num& xa = ext_->magnitude(pos);
    const Num target = twice(xa) - delta;

    // Positions [0, split) have 2 * magnitude >= target.
    const std::size_t split = partition_point([&](const Num& m) { return !(twice(m) < target); });
    const auto below = light.lower_bound(split);

    std::optional<SwapCandidate<Num>> upper;  // smallest light magnitude >= target / 2
    if (below != light.begin()) {
      const Num& xb = ext_->magnitude(*std::prev(below));
      if (xb < xa) {
        // Earliest light position carrying this magnitude.
        const std::size_t first = partition_point([&](const Num& m) { return xb < m; });
        const std::size_t q = *light.lower_bound(first);
        upper = SwapCandidate<Num>{pos, q, twice(xb) - target, false};
      }
    }
    std::optional<SwapCandidate<Num>> lower;  // largest light magnitude < target / 2
    if (below != light.end()) {
      const Num& xb = ext_->magnitude(*below);
      if (xa - delta < xb) lower = SwapCandidate<Num>{pos, *below, target - twice(xb), true};
    }

    if (!upper) return lower;
    if (!lower) return upper;
    if (upper->new_diff < lower->new_diff) return upper;
    if (lower->new_diff < upper->new_diff) return lower;
    return tie_ == TieBreak::prefer_no_sign_flip ? upper : lower;
  }

  void on_swap(const PartitionState<Num>& state, const SwapCandidate<Num>& cand) {
    for (std::size_t pos : {cand.pos_heavy, cand.pos_light}) {
      members(opposite(state.side[pos])).erase(pos);
      members(state.side[pos]).insert(pos);
    }
  }

 private:
  template <typename Pred>
  std::size_t partition_point(Pred pred) const {
    const auto& e = ext_->entries;
    const auto it = std::partition_point(e.begin(), e.end(),
                                         [&](const ExtendedEntry<Num>& x) { return pred(x.magnitude); });
    return static_cast<std::size_t>(it - e.begin());
  }

  std::set<std::size_t>& members(Side s) { return members_[s == Side::one ? 0 : 1]; }
  const std::set<std::size_t>& members(Side s) const { return members_[s == Side::one ? 0 : 1]; }

  const ExtendedState<Num>* ext_;
  TieBreak tie_;
  std::set<std::size_t> members_[2];
};

enum class TraverseOutcome { balanced, sign_flipped, exhausted };

// One descending pass over the heavier side. Elements swapped into the
// heavier side sit at later positions and are visited when the cursor
// reaches them.
template <ExactNumber Num, typename Finder>
TraverseOutcome run_traverse(const ExtendedState<Num>& ext, PartitionState<Num>& state, Finder& finder) {
  if (state.s1 == state.s2) return TraverseOutcome::balanced;
  ++state.traverse_count;
  const Side heavy = state.heavier();
  for (std::size_t pos = 0; pos < ext.size(); ++pos) {
    if (state.side[pos] != heavy) continue;
    // Zero magnitudes have no strictly smaller partner, and all later ones are zero too.
    if (!(Num(0) < ext.magnitude(pos))) break;
    const auto cand = finder.find(state, pos);
    if (!cand) continue;
    apply_swap(ext, state, *cand);
    finder.on_swap(state, *cand);
    if (state.s1 == state.s2) return TraverseOutcome::balanced;
    if (cand->sign_flips) return TraverseOutcome::sign_flipped;
  }
  return TraverseOutcome::exhausted;
}

template <ExactNumber Num>
TraverseOutcome run_traverse(const ExtendedState<Num>& ext, PartitionState<Num>& state,
                             TieBreak tie = TieBreak::prefer_no_sign_flip) {
  ReferenceFinder<Num> finder(ext, tie);
  return run_traverse(ext, state, finder);
}

// Drops the padding and moves every originally negative element to the
// other side. Moving -|x| across is the same as moving |x| the other way, so
// the signed S1 - S2 equals the magnitude-partition S1 - S2.
template <ExactNumber Num>
Partition finalize(const ExtendedState<Num>& ext, const PartitionState<Num>& state) {
  Partition out;
  for (std::size_t pos = 0; pos < ext.size(); ++pos) {
    const auto& entry = ext.entries[pos];
    if (entry.is_pad()) continue;
    Side s = state.side[pos];
    if (ext.indicators[entry.origin] == Sign::negative) s = opposite(s);
    (s == Side::one ? out.side1 : out.side2).push_back(entry.origin);
  }
  std::sort(out.side1.begin(), out.side1.end());
  std::sort(out.side2.begin(), out.side2.end());
  return out;
}

struct SolverReport {
  Partition partition;
  Value final_diff;  // |S1 - S2| in instance units (mantissas)
  std::size_t traverses = 0;
  std::size_t swaps = 0;
  std::optional<std::vector<Value>> diff_trace;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

template <ExactNumber Num, typename Finder>
void search(const ExtendedState<Num>& ext, PartitionState<Num>& state, Finder& finder) {
  while (run_traverse(ext, state, finder) == TraverseOutcome::sign_flipped) {
  }
}

}  // namespace detail

template <ExactNumber Num>
SolverReport solve(std::span<const Num> values, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto ext = build_extended(values);
  auto state = init_partition(ext, config.init_policy, config.seed);
  if (config.collect_trace) state.diff_trace.emplace(1, state.difference());

  if (config.engine == Engine::reference) {
    ReferenceFinder<Num> finder(ext, config.tie_break);
    detail::search(ext, state, finder);
  } else {
    ScanIndex<Num> finder(ext, state, config.tie_break);
    detail::search(ext, state, finder);
  }

  SolverReport report;
  report.partition = finalize(ext, state);
  report.final_diff = to_value(state.heavy_surplus());
  report.traverses = state.traverse_count;
  report.swaps = state.swap_count;
  if (state.diff_trace) {
    report.diff_trace.emplace();
    report.diff_trace->reserve(state.diff_trace->size());
    for (const Num& d : *state.diff_trace) report.diff_trace->push_back(to_value(d));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

inline SolverReport solve(const Instance& instance, const SolverConfig& config = {}) {
  return solve<Value>(std::span<const Value>(instance.values), config);
}

// Same search on CheckedInt64. Throws OverflowError if any value or running
// sum leaves the int64 range; the result is otherwise identical to solve().
inline SolverReport solve_int64(const Instance& instance, const SolverConfig& config = {}) {
  std::vector<CheckedInt64> values;
  values.reserve(instance.size());
  for (const Value& v : instance.values) values.push_back(from_value<CheckedInt64>(v));
  return solve<CheckedInt64>(std::span<const CheckedInt64>(values), config);
}

}  // namespace setpart
