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

// The setpart command-line front end. run() is the whole program minus
// process plumbing so it can be driven from tests.
//
// Exit codes: 0 success, 1 input or usage error, 2 verification failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "setpart/setpart.hpp"

namespace setpart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerify = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

struct SolverFlags {
  std::string init = "round-robin";
  std::string tie = "no-flip";
  std::string engine = "scan";
  std::optional<std::uint64_t> seed;
  bool trace = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("--init", init, "Initial partition")
        ->check(CLI::IsMember({"round-robin", "first-half", "random"}))
        ->capture_default_str();
    cmd.add_option("--tie", tie, "Tie rule between equally good swaps")
        ->check(CLI::IsMember({"no-flip", "smallest"}))
        ->capture_default_str();
    cmd.add_option("--engine", engine, "Candidate search engine")
        ->check(CLI::IsMember({"reference", "scan"}))
        ->capture_default_str();
    cmd.add_option("--seed", seed, "Seed for --init random");
    cmd.add_flag("--trace", trace, "Record |S1 - S2| after every swap");
  }

  SolverConfig config() const {
    SolverConfig c;
    c.init_policy = init == "first-half" ? InitPolicy::first_half
                    : init == "random"   ? InitPolicy::seeded_random
                                         : InitPolicy::round_robin_descending;
    if (c.init_policy == InitPolicy::seeded_random && !seed) throw UsageError("--init random requires --seed");
    c.seed = seed;
    c.tie_break = tie == "smallest" ? TieBreak::prefer_smallest : TieBreak::prefer_no_sign_flip;
    c.engine = engine == "reference" ? Engine::reference : Engine::scan;
    c.collect_trace = trace;
    return c;
  }
};

struct GenFlags {
  std::size_t n = 0;
  std::string dist = "uniform";
  std::int64_t lo = 1;
  std::int64_t hi = 1000000;
  unsigned max_bits = 32;
  unsigned digits_before = 3;
  unsigned digits_after = 2;
  double neg_fraction = 0.0;
  double zero_rate = 0.0;
  std::uint64_t seed = 1;

  void attach(CLI::App& cmd, bool with_n) {
    if (with_n) cmd.add_option("--n", n, "Number of values")->capture_default_str();
    cmd.add_option("--dist", dist, "Value distribution")
        ->check(CLI::IsMember({"uniform", "pow2", "decimal"}))
        ->capture_default_str();
    cmd.add_option("--lo", lo, "uniform: smallest value")->capture_default_str();
    cmd.add_option("--hi", hi, "uniform: largest value")->capture_default_str();
    cmd.add_option("--max-bits", max_bits, "pow2: largest exponent")->capture_default_str();
    cmd.add_option("--digits-before", digits_before, "decimal: integer digits")->capture_default_str();
    cmd.add_option("--digits-after", digits_after, "decimal: fractional digits")->capture_default_str();
    cmd.add_option("--neg-fraction", neg_fraction, "Probability of negating a value")->capture_default_str();
    cmd.add_option("--zero-rate", zero_rate, "Probability of forcing a value to zero")->capture_default_str();
    cmd.add_option("--seed", seed, "Generator seed")->capture_default_str();
  }

  GenSpec spec(std::size_t count, std::uint64_t seed_value) const {
    GenSpec s;
    s.n = count;
    if (dist == "pow2") {
      s.distribution = Pow2Magnitudes{max_bits};
    } else if (dist == "decimal") {
      s.distribution = DecimalValues{digits_before, digits_after};
    } else {
      s.distribution = UniformInt{lo, hi};
    }
    s.negative_fraction = neg_fraction;
    s.zero_rate = zero_rate;
    s.seed = seed_value;
    try {
      validate(s);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return s;
  }
};

inline std::string ms(std::chrono::nanoseconds d) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << std::chrono::duration<double, std::milli>(d).count();
  return os.str();
}

template <typename Fn>
std::chrono::nanoseconds timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw UsageError("invalid size '" + item + "'");
    }
    sizes.push_back(std::stoul(item));
  }
  if (sizes.empty()) throw UsageError("--sizes needs at least one size");
  return sizes;
}

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2;
}

// Seed for repetition `rep` of size `n` in a bench run.
inline std::uint64_t bench_seed(std::uint64_t base, std::size_t n, std::size_t rep) {
  SplitMix64 sm(base ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL));
  std::uint64_t s = sm.next();
  for (std::size_t i = 0; i < rep; ++i) s = sm.next();
  return s;
}

}  // namespace detail

inline int cmd_solve(const Instance& instance, const SolverConfig& config, bool verify,
                     const std::string& format, std::ostream& out, std::ostream& err) {
  const SolverReport report = solve(instance, config);
  const ReportDocument doc = make_report_document(instance, report, config);
  if (format == "csv") {
    out << "n,method,final_diff,traverses,swaps,elapsed_ms\n"
        << doc.n << ',' << doc.method << ',' << doc.final_diff << ',' << doc.traverses << ','
        << doc.swaps << ',' << detail::ms(report.elapsed) << '\n';
  } else {
    out << serialize_report(doc);
  }
  if (verify) {
    const Verdict v = is_locally_2opt(instance, report.partition);
    if (!v.is_locally_2opt) {
      err << "setpart: verification failed: partition is not locally 2-optimal\n";
      return kExitVerify;
    }
  }
  return kExitOk;
}

inline int cmd_check(const Instance& instance, const Partition& partition, std::ostream& out) {
  const Verdict v = is_locally_2opt(instance, partition);
  const Value diff = abs_value(signed_difference(instance, partition));
  if (v.is_locally_2opt) {
    out << "locally 2-optimal: yes\ndiff: " << to_decimal_string(diff, instance.scale_digits) << '\n';
    return kExitOk;
  }
  out << "locally 2-optimal: no\ndiff: " << to_decimal_string(diff, instance.scale_digits) << "\nwitness: move index";
  if (v.witness->moved.size() > 1) out << "es";
  for (std::size_t i : v.witness->moved) out << ' ' << i + 1;
  out << " -> diff " << to_decimal_string(v.witness->resulting_diff, instance.scale_digits) << '\n';
  return kExitVerify;
}

inline int cmd_oracle(const Instance& instance, const std::string& method, std::size_t limit,
                      std::ostream& out) {
  const bool use_enum = method == "enum" || (method == "auto" && instance.size() <= std::min(limit, kEnumerationLimit));
  OracleResult result;
  const auto elapsed = detail::timed([&] {
    result = use_enum ? optimal_diff_enum(instance, limit) : optimal_diff_mitm(instance, limit);
  });
  ReportDocument doc;
  doc.n = instance.size();
  doc.method = use_enum ? "oracle-enum" : "oracle-mitm";
  doc.final_diff = to_decimal_string(result.optimal_diff, instance.scale_digits);
  doc.partition = partition_from_side1(instance.size(), result.witness_side1);
  doc.elapsed_ms = std::chrono::duration<double, std::milli>(elapsed).count();
  out << serialize_report(doc);
  return kExitOk;
}

inline constexpr std::string_view kCompareHeader =
    "instance,n,solver_diff,solver_ms,solver_traverses,solver_swaps,greedy_diff,greedy_ms,"
    "kk_diff,kk_ms,oracle_enum_diff,oracle_mitm_diff,oracle_ms";

// One CSV row; oracle columns stay empty above their size limits.
inline std::string compare_row(const std::string& label, const Instance& instance, const SolverConfig& config,
                               std::size_t oracle_limit) {
  const auto render = [&](const Value& v) { return to_decimal_string(v, instance.scale_digits); };
  const SolverReport solver = solve(instance, config);
  BaselineReport greedy;
  const auto greedy_time = detail::timed([&] { greedy = greedy_partition(instance); });
  BaselineReport kk;
  const auto kk_time = detail::timed([&] { kk = karmarkar_karp(instance); });

  std::string enum_col;
  std::string mitm_col;
  std::string oracle_ms;
  const std::size_t n = instance.size();
  const auto oracle_time = detail::timed([&] {
    if (n <= std::min(oracle_limit, kEnumerationLimit)) enum_col = render(optimal_diff_enum(instance).optimal_diff);
    if (n <= std::min(oracle_limit, kMeetInTheMiddleLimit)) mitm_col = render(optimal_diff_mitm(instance).optimal_diff);
  });
  if (!enum_col.empty() || !mitm_col.empty()) oracle_ms = detail::ms(oracle_time);

  std::ostringstream row;
  row << label << ',' << n << ',' << render(solver.final_diff) << ',' << detail::ms(solver.elapsed) << ','
      << solver.traverses << ',' << solver.swaps << ',' << render(greedy.final_diff) << ','
      << detail::ms(greedy_time) << ',' << render(kk.final_diff) << ',' << detail::ms(kk_time) << ','
      << enum_col << ',' << mitm_col << ',' << oracle_ms;
  return row.str();
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-way number partitioning: local 2-opt search, verifier, oracles and baselines", "setpart"};
  app.require_subcommand(1);

  detail::SolverFlags solver_flags;
  std::string input = "-";
  std::string format = "report";
  bool verify = false;

  auto* solve_cmd = app.add_subcommand("solve", "Find a locally 2-optimal partition");
  solve_cmd->add_option("input", input, "Instance file or '-' for stdin")->capture_default_str();
  solver_flags.attach(*solve_cmd);
  solve_cmd->add_flag("--verify", verify, "Check the result; exit 2 if it is not locally 2-optimal");
  solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"report", "csv"}));

  std::string partition_path;
  auto* check_cmd = app.add_subcommand("check", "Check whether a partition is locally 2-optimal");
  check_cmd->add_option("input", input, "Instance file or '-'")->required();
  check_cmd->add_option("partition", partition_path, "File listing side-1 indices (1-based)")->required();

  std::string oracle_method = "auto";
  std::size_t oracle_limit = kMeetInTheMiddleLimit;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum difference for small instances");
  oracle_cmd->add_option("input", input, "Instance file or '-'")->capture_default_str();
  oracle_cmd->add_option("--method", oracle_method, "enum, mitm or auto")
      ->check(CLI::IsMember({"auto", "enum", "mitm"}))
      ->capture_default_str();
  oracle_cmd->add_option("--oracle-limit", oracle_limit, "Largest N the oracle will accept")->capture_default_str();

  std::vector<std::string> compare_inputs;
  std::size_t count = 1;
  detail::GenFlags gen_flags;
  detail::SolverFlags compare_solver;
  auto* compare_cmd = app.add_subcommand("compare", "CSV of solver, greedy, Karmarkar-Karp and oracle diffs");
  compare_cmd->add_option("inputs", compare_inputs, "Instance files; without files, instances are generated");
  compare_cmd->add_option("--count", count, "Generated instances (seeds seed, seed+1, ...)")->capture_default_str();
  compare_cmd->add_option("--oracle-limit", oracle_limit, "Largest N for the oracle columns")->capture_default_str();
  compare_cmd->add_option("--init", compare_solver.init, "Initial partition")
      ->check(CLI::IsMember({"round-robin", "first-half", "random"}));
  compare_cmd->add_option("--tie", compare_solver.tie)->check(CLI::IsMember({"no-flip", "smallest"}));
  compare_cmd->add_option("--engine", compare_solver.engine)->check(CLI::IsMember({"reference", "scan"}));
  compare_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
  gen_flags.attach(*compare_cmd, true);

  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random instance to stdout");
  gen_flags.attach(*gen_cmd, true);

  std::string sizes = "1000,2000";
  long long reps = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Runtime and traverse counts versus instance size");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated instance sizes")->capture_default_str();
  bench_cmd->add_option("--reps", reps, "Instances per size")->capture_default_str();
  bench_cmd->add_option("--engine", compare_solver.engine)->check(CLI::IsMember({"reference", "scan"}));
  bench_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));
  gen_flags.attach(*bench_cmd, false);

  std::vector<std::string> argv_storage{"setpart"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "setpart: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) {
      const Instance instance = parse_instance(detail::read_input(input, in));
      return cmd_solve(instance, solver_flags.config(), verify, format, out, err);
    }
    if (check_cmd->parsed()) {
      const Instance instance = parse_instance(detail::read_input(input, in));
      const Partition partition = parse_partition(detail::read_input(partition_path, in), instance.size());
      return cmd_check(instance, partition, out);
    }
    if (oracle_cmd->parsed()) {
      const Instance instance = parse_instance(detail::read_input(input, in));
      return cmd_oracle(instance, oracle_method, oracle_limit, out);
    }
    if (gen_cmd->parsed()) {
      out << write_instance(generate(gen_flags.spec(gen_flags.n, gen_flags.seed)));
      return kExitOk;
    }
    if (!compare_solver.seed) compare_solver.seed = gen_flags.seed;
    if (compare_cmd->parsed()) {
      const SolverConfig config = compare_solver.config();
      out << kCompareHeader << '\n';
      if (!compare_inputs.empty()) {
        for (const auto& path : compare_inputs) {
          out << compare_row(path, parse_instance(detail::read_input(path, in)), config, oracle_limit) << '\n';
        }
      } else {
        for (std::size_t k = 0; k < count; ++k) {
          const Instance instance = generate(gen_flags.spec(gen_flags.n, gen_flags.seed + k));
          out << compare_row(*instance.id, instance, config, oracle_limit) << '\n';
        }
      }
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      if (reps <= 0) throw UsageError("--reps must be positive");
      SolverConfig config = compare_solver.config();
      bool within_bound = true;
      out << "n,reps,median_ms,min_ms,max_ms,max_traverses,total_traverses,total_swaps,traverses_within_n\n";
      for (std::size_t n : detail::parse_sizes(sizes)) {
        std::vector<double> times;
        std::size_t max_traverses = 0;
        std::size_t total_traverses = 0;
        std::size_t total_swaps = 0;
        for (long long r = 0; r < reps; ++r) {
          const Instance instance = generate(gen_flags.spec(n, detail::bench_seed(gen_flags.seed, n, r)));
          const SolverReport report = solve(instance, config);
          times.push_back(std::chrono::duration<double, std::milli>(report.elapsed).count());
          max_traverses = std::max(max_traverses, report.traverses);
          total_traverses += report.traverses;
          total_swaps += report.swaps;
        }
        const bool ok = max_traverses <= n;
        within_bound = within_bound && ok;
        out << std::fixed << std::setprecision(3) << n << ',' << reps << ',' << detail::median(times) << ','
            << *std::min_element(times.begin(), times.end()) << ','
            << *std::max_element(times.begin(), times.end()) << ',' << max_traverses << ',' << total_traverses
            << ',' << total_swaps << ',' << (ok ? "yes" : "no") << '\n';
      }
      if (!within_bound) {
        err << "setpart: traverse count exceeded N\n";
        return kExitVerify;
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "setpart: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace setpart::cli
