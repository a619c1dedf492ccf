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

#include <chrono>
#include <string>

#include "setpart/baselines.hpp"
#include "setpart/instance.hpp"
#include "setpart/instance_io.hpp"
#include "setpart/solver.hpp"

namespace setpart {

inline constexpr std::string_view kSolverMethod = "local-2opt";

inline std::vector<std::pair<std::string, std::string>> describe(const SolverConfig& config) {
  std::vector<std::pair<std::string, std::string>> out{
      {"init", std::string(to_string(config.init_policy))},
      {"tie", std::string(to_string(config.tie_break))},
      {"engine", std::string(to_string(config.engine))},
  };
  if (config.seed) out.emplace_back("seed", std::to_string(*config.seed));
  return out;
}

inline ReportDocument make_report_document(const Instance& instance, const SolverReport& report,
                                           const SolverConfig& config) {
  ReportDocument doc;
  doc.n = instance.size();
  doc.method = std::string(kSolverMethod);
  doc.final_diff = to_decimal_string(report.final_diff, instance.scale_digits);
  doc.partition = report.partition;
  doc.traverses = report.traverses;
  doc.swaps = report.swaps;
  doc.elapsed_ms = std::chrono::duration<double, std::milli>(report.elapsed).count();
  doc.config = describe(config);
  if (report.diff_trace) {
    doc.diff_trace.emplace();
    for (const Value& d : *report.diff_trace) {
      doc.diff_trace->push_back(to_decimal_string(d, instance.scale_digits));
    }
  }
  return doc;
}

inline ReportDocument make_report_document(const Instance& instance, const BaselineReport& report) {
  ReportDocument doc;
  doc.n = instance.size();
  doc.method = std::string(to_string(report.method));
  doc.final_diff = to_decimal_string(report.final_diff, instance.scale_digits);
  doc.partition = report.partition;
  return doc;
}

}  // namespace setpart
