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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Thresholds are fixed here.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "setpart/setpart.hpp"

namespace {

using namespace setpart;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ": " << detail << std::endl;
  if (!pass) ++failures;
}

Instance make(std::initializer_list<long long> xs) {
  Instance in;
  for (long long x : xs) in.values.emplace_back(x);
  return in;
}

// Fuzz corpus: N cycles through 0..64, magnitudes up to 10^6, mixed signs,
// zero rate 0 or 0.1, and every tenth instance with forced duplicates.
std::vector<Instance> fuzz_corpus(std::size_t count) {
  std::vector<Instance> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec;
    spec.n = i % 65;
    spec.distribution = UniformInt{1, 1000000};
    spec.negative_fraction = 0.5;
    spec.zero_rate = i % 2 ? 0.1 : 0.0;
    spec.seed = 0xACCE55ULL + i;
    Instance in = generate(spec);
    if (i % 10 == 3 && in.size() >= 2) {
      Rng rng(spec.seed ^ 0xD0D0ULL);
      in.values[1] = in.values[0];
      for (std::size_t j = 2; j < in.size(); ++j) {
        if (rng.bernoulli(0.3)) in.values[j] = in.values[rng.below(j)];
      }
    }
    corpus.push_back(std::move(in));
  }
  return corpus;
}

bool same_report(const SolverReport& a, const SolverReport& b) {
  return a.partition == b.partition && a.final_diff == b.final_diff && a.traverses == b.traverses &&
         a.swaps == b.swaps && a.diff_trace == b.diff_trace;
}

bool strictly_descending(const std::vector<Value>& trace) {
  for (std::size_t k = 1; k < trace.size(); ++k) {
    if (!(abs_value(trace[k]) < abs_value(trace[k - 1]))) return false;
  }
  return true;
}

}  // namespace

int main() {
  // Criteria 1, 3, 4 (fuzz part) and 6 share one corpus.
  const auto corpus = fuzz_corpus(1000);
  std::size_t runs = 0;
  std::size_t locally_optimal = 0;
  std::size_t descending = 0;
  std::size_t within_bound = 0;
  std::size_t engines_equal = 0;
  std::size_t comparisons = 0;
  std::size_t max_ratio_n = 0;
  std::size_t max_traverses_seen = 0;
  const auto fuzz_start = Clock::now();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& in = corpus[i];
    for (InitPolicy init : {InitPolicy::round_robin_descending, InitPolicy::first_half, InitPolicy::seeded_random}) {
      SolverConfig c;
      c.init_policy = init;
      c.seed = 1000 + i;
      c.collect_trace = true;
      c.engine = Engine::reference;
      const SolverReport ref = solve(in, c);
      c.engine = Engine::scan;
      const SolverReport scan = solve(in, c);
      ++comparisons;
      engines_equal += same_report(ref, scan);
      for (const SolverReport* r : {&ref, &scan}) {
        ++runs;
        locally_optimal += is_locally_2opt(in, r->partition).is_locally_2opt;
        descending += strictly_descending(*r->diff_trace);
        within_bound += r->traverses <= in.size();
        if (r->traverses > max_traverses_seen) {
          max_traverses_seen = r->traverses;
          max_ratio_n = in.size();
        }
      }
    }
  }
  const double fuzz_seconds = seconds_since(fuzz_start);
  {
    std::ostringstream d;
    d << "local 2-optimality: " << locally_optimal << "/" << runs << " runs pass the checker in "
      << fuzz_seconds << " s (limit 60 s)";
    report("AC1", locally_optimal == runs && fuzz_seconds < 60.0, d.str());
  }

  // Criterion 2.
  {
    const auto start = Clock::now();
    std::size_t ok_dominance = 0;
    std::size_t ok_parity = 0;
    std::size_t ok_agree = 0;
    const std::size_t count = 200;
    for (std::size_t i = 0; i < count; ++i) {
      GenSpec spec;
      spec.n = i % 21;
      spec.distribution = UniformInt{1, i % 3 ? 1000000 : 30};
      spec.negative_fraction = 0.4;
      spec.zero_rate = i % 2 ? 0.1 : 0.0;
      spec.seed = 0x0AC1E5ULL + i;
      const Instance in = generate(spec);
      const Value solver = solve(in).final_diff;
      const Value enumerated = optimal_diff_enum(in).optimal_diff;
      const Value mitm = optimal_diff_mitm(in).optimal_diff;
      ok_dominance += !(solver < enumerated);
      ok_parity += (solver % 2) == (enumerated % 2);
      ok_agree += enumerated == mitm;
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << "oracle dominance " << ok_dominance << "/" << count << ", parity " << ok_parity << "/" << count
      << ", enum == mitm " << ok_agree << "/" << count << " in " << secs << " s (limit 120 s)";
    report("AC2", ok_dominance == count && ok_parity == count && ok_agree == count && secs < 120.0, d.str());
  }

  // Criterion 5 (and the bench half of criterion 4).
  std::size_t bench_runs = 0;
  std::size_t bench_within = 0;
  std::ostringstream ac5;
  bool ac5_pass = false;
  {
    auto median_ms = [&](std::size_t n) {
      std::vector<double> times;
      for (std::uint64_t k = 0; k < 10; ++k) {
        GenSpec spec;
        spec.n = n;
        spec.distribution = UniformInt{1, 1000000};
        spec.negative_fraction = 0.5;
        spec.seed = 0xBE7C4ULL + 31 * n + k;
        const Instance in = generate(spec);
        SolverConfig c;
        c.engine = Engine::scan;
        // Best of three runs per instance damps scheduler noise.
        double best = 0;
        for (int rep = 0; rep < 3; ++rep) {
          const SolverReport r = solve(in, c);
          ++bench_runs;
          bench_within += r.traverses <= n;
          const double t = std::chrono::duration<double, std::milli>(r.elapsed).count();
          best = rep == 0 ? t : std::min(best, t);
        }
        times.push_back(best);
      }
      std::sort(times.begin(), times.end());
      return (times[4] + times[5]) / 2;
    };
    median_ms(1000);  // warm-up
    const double t1 = median_ms(1000);
    const double t2 = median_ms(2000);
    const double ratio = t2 / t1;
    ac5 << "scan engine median " << t1 << " ms at N=1000, " << t2 << " ms at N=2000, ratio " << ratio
      << " (target <= 5, fail above 8)";
    if (ratio > 5.0 && ratio <= 8.0) ac5 << " WARNING: above target";
    ac5_pass = ratio <= 8.0;
  }

  {
    std::ostringstream d;
    d << "strict descent of |S1 - S2| per swap: " << descending << "/" << runs << " traced runs";
    report("AC3", descending == runs, d.str());
  }

  {
    std::ostringstream d;
    d << "traverses <= N on " << within_bound << "/" << runs << " fuzz runs and " << bench_within << "/"
      << bench_runs << " bench runs (largest count " << max_traverses_seen << " at N=" << max_ratio_n << ")";
    report("AC4", within_bound == runs && bench_within == bench_runs, d.str());
  }

  report("AC5", ac5_pass, ac5.str());

  {
    std::ostringstream d;
    d << "reference and scan engines identical on " << engines_equal << "/" << comparisons << " configurations";
    report("AC6", engines_equal == comparisons, d.str());
  }

  // Criterion 7.
  {
    const Value solver = solve(make({8, 6, 5})).final_diff;
    const Value kk = karmarkar_karp(make({8, 7, 6, 5, 4})).final_diff;
    const Value oracle = optimal_diff_enum(make({8, 7, 6, 5, 4})).optimal_diff;
    const Value greedy = greedy_partition(make({8, 7, 6, 5, 4})).final_diff;
    std::ostringstream d;
    d << "solve{8,6,5}=" << solver << " (3), kk{8,7,6,5,4}=" << kk << " (2), oracle=" << oracle
      << " (0), greedy=" << greedy << " (4)";
    report("AC7", solver == 3 && kk == 2 && oracle == 0 && greedy == 4, d.str());
  }

  // Criterion 8.
  {
    std::size_t scaled_ok = 0;
    std::size_t scaled_total = 0;
    std::size_t negated_ok = 0;
    const std::size_t count = 200;
    for (std::size_t i = 0; i < count; ++i) {
      GenSpec spec;
      spec.n = i % 65;
      spec.distribution = UniformInt{1, 1000000};
      spec.negative_fraction = 0.4;
      spec.zero_rate = i % 2 ? 0.1 : 0.0;
      spec.seed = 0x5CA1EULL + i;
      const Instance in = generate(spec);
      SolverConfig c;
      c.init_policy = static_cast<InitPolicy>(i % 3);
      c.seed = i;
      c.tie_break = static_cast<TieBreak>(i / 3 % 2);
      const SolverReport base = solve(in, c);
      for (int factor : {2, 10, 1000}) {
        Instance scaled = in;
        for (Value& v : scaled.values) v *= factor;
        const SolverReport r = solve(scaled, c);
        ++scaled_total;
        scaled_ok += r.partition == base.partition && r.final_diff == base.final_diff * factor;
      }
      Instance negated = in;
      for (Value& v : negated.values) v = -v;
      negated_ok += solve(negated, c).final_diff == base.final_diff;
    }
    std::ostringstream d;
    d << "scaling equivariance " << scaled_ok << "/" << scaled_total << ", negation symmetry " << negated_ok
      << "/" << count;
    report("AC8", scaled_ok == scaled_total && negated_ok == count, d.str());
  }

  // Criterion 9.
  {
    Rng rng(0xC4EC4ULL);
    std::size_t agree = 0;
    std::size_t optimal = 0;
    const std::size_t count = 500;
    for (std::size_t i = 0; i < count; ++i) {
      GenSpec spec;
      spec.n = rng.below(11);
      spec.distribution = UniformInt{1, rng.bernoulli(0.5) ? 9 : 1000000};
      spec.negative_fraction = 0.4;
      spec.zero_rate = 0.1;
      spec.seed = rng.next();
      const Instance in = generate(spec);
      Partition p;
      for (std::size_t j = 0; j < in.size(); ++j) (rng.bernoulli(0.5) ? p.side1 : p.side2).push_back(j);
      const bool expected = brute_force_2opt_oracle(in, p).is_locally_2opt;
      optimal += expected;
      agree += is_locally_2opt(in, p).is_locally_2opt == expected;
    }
    std::ostringstream d;
    d << "checker agrees with brute-force oracle on " << agree << "/" << count << " pairs (" << optimal
      << " locally 2-optimal, " << count - optimal << " not)";
    report("AC9", agree == count, d.str());
  }

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
