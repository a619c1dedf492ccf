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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "setpart/instance_io.hpp"
#include "setpart/optimality.hpp"
#include "setpart/oracle.hpp"

namespace setpart {
namespace {

Instance make(std::initializer_list<long long> xs) {
  Instance in;
  for (long long x : xs) in.values.emplace_back(x);
  return in;
}

// Independent minimum over every subset (no symmetry reduction).
Value subset_minimum(const Instance& in) {
  const std::size_t n = in.size();
  Value best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Value d = 0;
    for (std::size_t i = 0; i < n; ++i) d += (mask >> i & 1) ? in.values[i] : Value(-in.values[i]);
    if (best < 0 || abs_value(d) < best) best = abs_value(d);
  }
  return best;
}

Instance random_instance(Rng& rng, std::size_t max_n, std::int64_t hi = 1000) {
  GenSpec spec;
  spec.n = rng.below(max_n + 1);
  spec.distribution = UniformInt{1, hi};
  spec.negative_fraction = 0.3;
  spec.zero_rate = 0.05;
  spec.seed = rng.next();
  return generate(spec);
}

void expect_witness_consistent(const Instance& in, const OracleResult& r) {
  const Partition p = partition_from_side1(in.size(), r.witness_side1);
  EXPECT_EQ(abs_value(signed_difference(in, p)), r.optimal_diff);
}

TEST(OptimalDiffEnum, Examples) {
  const OracleResult r = optimal_diff_enum(make({8, 6, 5}));
  EXPECT_EQ(r.optimal_diff, 3);
  EXPECT_EQ(r.witness_side1, (std::vector<std::size_t>{0}));
  EXPECT_EQ(optimal_diff_enum(Instance{}).optimal_diff, 0);
  EXPECT_EQ(optimal_diff_enum(make({3, -1, 2})).optimal_diff, 0);
  EXPECT_EQ(optimal_diff_enum(make({-7})).optimal_diff, 7);
}

TEST(OptimalDiffEnum, LexicographicallySmallestWitness) {
  // {1, 1, 1, 1}: sign vectors with s_1 = + and diff 0 are ++--, +-+-, +--+;
  // the smallest puts index 1 on side 1 as well.
  EXPECT_EQ(optimal_diff_enum(make({1, 1, 1, 1})).witness_side1, (std::vector<std::size_t>{0, 1}));
}

TEST(OptimalDiffEnum, RefusesAboveLimit) {
  Instance in;
  in.values.assign(kEnumerationLimit + 1, Value(1));
  try {
    optimal_diff_enum(in);
    FAIL() << "expected LimitError";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
  in.values.pop_back();
  EXPECT_EQ(optimal_diff_enum(in).optimal_diff, 0);
}

TEST(OptimalDiffEnum, MatchesSubsetEnumeration) {
  Rng rng(1);
  for (int k = 0; k < 150; ++k) {
    const Instance in = random_instance(rng, 12);
    const OracleResult r = optimal_diff_enum(in);
    ASSERT_EQ(r.optimal_diff, subset_minimum(in));
    expect_witness_consistent(in, r);
  }
}

TEST(OptimalDiffMitm, Examples) {
  EXPECT_EQ(optimal_diff_mitm(make({8, 7, 6, 5, 4})).optimal_diff, 0);
  EXPECT_EQ(optimal_diff_mitm(make({1})).optimal_diff, 1);
  EXPECT_EQ(optimal_diff_mitm(Instance{}).optimal_diff, 0);
  const OracleResult r = optimal_diff_mitm(make({8, 6, 5}));
  EXPECT_EQ(r.optimal_diff, 3);
  EXPECT_EQ(r.witness_side1.front(), 0u);
}

TEST(OptimalDiffMitm, AgreesWithEnumeration) {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const Instance in = random_instance(rng, 20, k % 2 ? 1000000 : 50);
    const OracleResult a = optimal_diff_enum(in);
    const OracleResult b = optimal_diff_mitm(in);
    ASSERT_EQ(a.optimal_diff, b.optimal_diff) << "case " << k;
    expect_witness_consistent(in, b);
  }
}

TEST(OptimalDiffMitm, RefusesAboveLimit) {
  Instance in;
  in.values.assign(kMeetInTheMiddleLimit + 1, Value(1));
  EXPECT_THROW(optimal_diff_mitm(in), LimitError);
  EXPECT_THROW(optimal_diff_mitm(make({1, 2, 3}), 2), LimitError);
}

TEST(Oracle, WideValuesUseExactArithmetic) {
  // Sums beyond int64: both methods fall back to unbounded integers.
  const Value big = Value(1) << 80;
  Instance in;
  in.values = {big * 3, big * 2, big + 1, big, Value(-5)};
  // The B coefficient 3a + 2b + c + d is odd, so |coef| >= 1; coef = 1 with
  // (B + 1) negated and -5 kept positive gives B - 1 - 5.
  const Value expected = big - 6;
  ASSERT_EQ(subset_minimum(in), expected);
  EXPECT_EQ(optimal_diff_enum(in).optimal_diff, expected);
  EXPECT_EQ(optimal_diff_mitm(in).optimal_diff, expected);
}

TEST(Oracle, ParityAndDominance) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Instance in = random_instance(rng, 16);
    Value total = 0;
    for (const Value& v : in.values) total += v;
    const Value best = optimal_diff_enum(in).optimal_diff;
    EXPECT_EQ(abs_value(Value(best % 2)), abs_value(Value(total % 2)));
    // No random partition beats it.
    for (int t = 0; t < 20; ++t) {
      Partition p;
      for (std::size_t i = 0; i < in.size(); ++i) (rng.bernoulli(0.5) ? p.side1 : p.side2).push_back(i);
      EXPECT_LE(best, abs_value(signed_difference(in, p)));
    }
  }
}

TEST(Oracle, WitnessIsLocallyOptimal) {
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const Instance in = random_instance(rng, 18);
    for (const OracleResult& r : {optimal_diff_enum(in), optimal_diff_mitm(in)}) {
      EXPECT_TRUE(is_locally_2opt(in, partition_from_side1(in.size(), r.witness_side1)).is_locally_2opt);
    }
  }
}

}  // namespace
}  // namespace setpart
