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

// Text formats and the seeded instance generator.
//
// Instance files hold one value per line: an optional '-', decimal digits,
// and optionally '.' followed by fractional digits. '#' starts a comment and
// blank lines are ignored. All values of an instance are normalised to a
// shared power-of-ten scale (the largest number of fractional digits seen).
//
// Reports are JSON objects with a fixed key order. Indices in every file
// format are 1-based.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "setpart/instance.hpp"
#include "setpart/random.hpp"
#include "setpart/value.hpp"

namespace setpart {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, token) for every non-blank, comment-stripped line.
template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(line_no, line);
  }
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  struct Token {
    bool negative;
    std::string_view whole;
    std::string_view fraction;
  };
  std::vector<Token> tokens;
  std::size_t scale_digits = 0;
  detail::for_each_token(text, [&](std::size_t line_no, std::string_view tok) {
    Token t{false, tok, {}};
    if (t.whole.front() == '-') {
      t.negative = true;
      t.whole.remove_prefix(1);
    }
    if (const auto dot = t.whole.find('.'); dot != std::string_view::npos) {
      t.fraction = t.whole.substr(dot + 1);
      t.whole = t.whole.substr(0, dot);
      if (!detail::all_digits(t.fraction)) {
        throw ParseError(line_no, "malformed value '" + std::string(tok) + "'");
      }
    }
    if (!detail::all_digits(t.whole)) throw ParseError(line_no, "malformed value '" + std::string(tok) + "'");
    scale_digits = std::max(scale_digits, t.fraction.size());
    tokens.push_back(t);
  });

  Instance instance;
  instance.scale_digits = static_cast<unsigned>(scale_digits);
  instance.values.reserve(tokens.size());
  for (const Token& t : tokens) {
    std::string digits(t.whole);
    digits += t.fraction;
    digits.append(scale_digits - t.fraction.size(), '0');
    // cpp_int reads a leading '0' as an octal prefix.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    Value v(digits);
    instance.values.push_back(t.negative ? Value(-v) : v);
  }
  return instance;
}

inline std::string write_instance(const Instance& instance) {
  std::string out;
  for (const Value& v : instance.values) {
    out += to_decimal_string(v, instance.scale_digits);
    out += '\n';
  }
  return out;
}

// Side-1 indices, 1-based, one per line; the rest of {1..n} is side 2.
inline Partition parse_partition(std::string_view text, std::size_t n) {
  std::vector<std::size_t> side1;
  detail::for_each_token(text, [&](std::size_t line_no, std::string_view tok) {
    if (!detail::all_digits(tok) || tok.size() > 18) {
      throw ParseError(line_no, "malformed index '" + std::string(tok) + "'");
    }
    const std::size_t index = std::stoull(std::string(tok));
    if (index == 0) throw ParseError(line_no, "indices are 1-based");
    side1.push_back(index - 1);
  });
  return partition_from_side1(n, std::move(side1));
}

// ---------------------------------------------------------------------------
// Generator

struct UniformInt {
  std::int64_t lo = 1;
  std::int64_t hi = 100;
};

// Magnitudes 2^k with k uniform in [0, max_bits].
struct Pow2Magnitudes {
  unsigned max_bits = 32;
};

// Uniform mantissas with digits_before + digits_after decimal digits, over
// scale 10^digits_after.
struct DecimalValues {
  unsigned digits_before = 3;
  unsigned digits_after = 2;
};

struct GenSpec {
  std::size_t n = 0;
  std::variant<UniformInt, Pow2Magnitudes, DecimalValues> distribution = UniformInt{};
  // 0 is the all-positive sign mode; otherwise each value is negated with
  // this probability.
  double negative_fraction = 0.0;
  double zero_rate = 0.0;
  std::uint64_t seed = 0;
};

inline void validate(const GenSpec& spec) {
  auto is_fraction = [](double f) { return f >= 0.0 && f <= 1.0; };  // rejects NaN
  if (!is_fraction(spec.negative_fraction)) throw std::invalid_argument("negative fraction must lie in [0, 1]");
  if (!is_fraction(spec.zero_rate)) throw std::invalid_argument("zero rate must lie in [0, 1]");
  if (const auto* u = std::get_if<UniformInt>(&spec.distribution); u && u->lo > u->hi) {
    throw std::invalid_argument("uniform range requires lo <= hi");
  }
  if (const auto* d = std::get_if<DecimalValues>(&spec.distribution);
      d && d->digits_before + d->digits_after == 0) {
    throw std::invalid_argument("decimal values need at least one digit");
  }
}

// Per position the draws are: value, zero test, sign test, always in that
// order, so changing one rate does not shift the value stream.
inline Instance generate(const GenSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  Instance instance;
  instance.id = "seed-" + std::to_string(spec.seed);
  if (const auto* d = std::get_if<DecimalValues>(&spec.distribution)) instance.scale_digits = d->digits_after;
  instance.values.reserve(spec.n);

  for (std::size_t i = 0; i < spec.n; ++i) {
    Value v = std::visit(
        [&](const auto& dist) -> Value {
          using D = std::decay_t<decltype(dist)>;
          if constexpr (std::is_same_v<D, UniformInt>) {
            return Value(rng.between(dist.lo, dist.hi));
          } else if constexpr (std::is_same_v<D, Pow2Magnitudes>) {
            return Value(1) << static_cast<unsigned>(rng.between(0, dist.max_bits));
          } else {
            Value m = 0;
            for (unsigned k = 0; k < dist.digits_before + dist.digits_after; ++k) {
              m = m * 10 + static_cast<unsigned>(rng.below(10));
            }
            return m;
          }
        },
        spec.distribution);
    const bool zero = rng.bernoulli(spec.zero_rate);
    const bool negate = rng.bernoulli(spec.negative_fraction);
    if (zero) v = 0;
    if (negate) v = -v;
    instance.values.push_back(std::move(v));
  }
  return instance;
}

// ---------------------------------------------------------------------------
// Report documents

struct ReportDocument {
  std::size_t n = 0;
  std::string method;
  std::string final_diff;  // decimal, original scale
  Partition partition;     // 0-based in memory, 1-based on disk
  std::size_t traverses = 0;
  std::size_t swaps = 0;
  double elapsed_ms = 0.0;
  std::vector<std::pair<std::string, std::string>> config;
  std::optional<std::vector<std::string>> diff_trace;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline std::string serialize_report(const ReportDocument& doc) {
  auto one_based = [](const std::vector<std::size_t>& side) {
    std::vector<std::size_t> out;
    out.reserve(side.size());
    for (std::size_t i : side) out.push_back(i + 1);
    return out;
  };
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["method"] = doc.method;
  j["final_diff"] = doc.final_diff;
  j["side1"] = one_based(doc.partition.side1);
  j["side2"] = one_based(doc.partition.side2);
  j["traverses"] = doc.traverses;
  j["swaps"] = doc.swaps;
  j["elapsed_ms"] = doc.elapsed_ms;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.config) j["config"][k] = v;
  if (doc.diff_trace) j["diff_trace"] = *doc.diff_trace;
  return j.dump(2) + "\n";
}

inline ReportDocument parse_report(std::string_view text) {
  const auto j = nlohmann::ordered_json::parse(text);
  auto zero_based = [](const nlohmann::ordered_json& side) {
    std::vector<std::size_t> out;
    for (const auto& i : side) {
      const auto v = i.get<std::size_t>();
      if (v == 0) throw std::invalid_argument("report indices are 1-based");
      out.push_back(v - 1);
    }
    return out;
  };
  ReportDocument doc;
  doc.n = j.at("n").get<std::size_t>();
  doc.method = j.at("method").get<std::string>();
  doc.final_diff = j.at("final_diff").get<std::string>();
  doc.partition.side1 = zero_based(j.at("side1"));
  doc.partition.side2 = zero_based(j.at("side2"));
  doc.traverses = j.at("traverses").get<std::size_t>();
  doc.swaps = j.at("swaps").get<std::size_t>();
  doc.elapsed_ms = j.at("elapsed_ms").get<double>();
  for (const auto& [k, v] : j.at("config").items()) doc.config.emplace_back(k, v.get<std::string>());
  if (j.contains("diff_trace")) doc.diff_trace = j.at("diff_trace").get<std::vector<std::string>>();
  return doc;
}

}  // namespace setpart
