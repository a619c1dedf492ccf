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

// Solves a small decimal instance, checks the result and compares it with
// the exact optimum and the two classical heuristics.

#include <iostream>

#include "setpart/setpart.hpp"

int main() {
  const setpart::Instance instance = setpart::parse_instance("1.5\n2.25\n-0.75\n3.10\n0.4\n");

  setpart::SolverConfig config;
  config.collect_trace = true;
  const setpart::SolverReport report = setpart::solve(instance, config);
  std::cout << setpart::serialize_report(setpart::make_report_document(instance, report, config));

  const auto verdict = setpart::is_locally_2opt(instance, report.partition);
  std::cout << "locally 2-optimal: " << (verdict.is_locally_2opt ? "yes" : "no") << '\n';

  const auto render = [&](const setpart::Value& v) {
    return setpart::to_decimal_string(v, instance.scale_digits);
  };
  std::cout << "optimum:        " << render(setpart::optimal_diff_enum(instance).optimal_diff) << '\n'
            << "greedy:         " << render(setpart::greedy_partition(instance).final_diff) << '\n'
            << "karmarkar-karp: " << render(setpart::karmarkar_karp(instance).final_diff) << '\n';
}
