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

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace setpart {

// Exact signed integer of unbounded width. Decimal inputs are stored as
// integer mantissas that share one power-of-ten scale per instance.
using Value = boost::multiprecision::cpp_int;

// Arithmetic the solvers need from a number type: exact addition,
// subtraction, negation and total ordering. No multiplication or division.
template <typename T>
concept ExactNumber = std::totally_ordered<T> && std::constructible_from<T, int> &&
    requires(const T a, const T b) {
      { a + b } -> std::convertible_to<T>;
      { a - b } -> std::convertible_to<T>;
      { -a } -> std::convertible_to<T>;
    };

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// 64-bit fast path. Every operation is range-checked and throws
// OverflowError instead of wrapping.
class CheckedInt64 {
 public:
  constexpr CheckedInt64() = default;
  constexpr CheckedInt64(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr explicit CheckedInt64(std::int64_t v) : v_(v) {}

  constexpr std::int64_t get() const { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 addition overflow");
    return CheckedInt64(r);
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("int64 subtraction overflow");
    return CheckedInt64(r);
  }
  friend CheckedInt64 operator-(CheckedInt64 a) { return CheckedInt64(0) - a; }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }

  friend constexpr bool operator==(CheckedInt64, CheckedInt64) = default;
  friend constexpr auto operator<=>(CheckedInt64, CheckedInt64) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt64 v) { return os << v.v_; }

 private:
  std::int64_t v_ = 0;
};

template <ExactNumber Num>
Num abs_value(const Num& x) {
  return x < Num(0) ? Num(-x) : x;
}

template <ExactNumber Num>
Num twice(const Num& x) {
  return x + x;
}

// Converts an exact Value to the number type used by a solver instantiation.
template <ExactNumber Num>
Num from_value(const Value& v) {
  if constexpr (std::same_as<Num, Value>) {
    return v;
  } else if constexpr (std::same_as<Num, CheckedInt64>) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("value does not fit in int64: " + v.str());
    }
    return CheckedInt64(static_cast<std::int64_t>(v));
  } else {
    return static_cast<Num>(v);
  }
}

template <ExactNumber Num>
Value to_value(const Num& v) {
  if constexpr (std::same_as<Num, Value>) {
    return v;
  } else if constexpr (std::same_as<Num, CheckedInt64>) {
    return Value(v.get());
  } else {
    return Value(v);
  }
}

inline Value pow10(unsigned digits) {
  return boost::multiprecision::pow(Value(10), digits);
}

// Renders mantissa / 10^scale_digits with exactly scale_digits fractional
// digits: (150, 2) -> "1.50", (-5, 1) -> "-0.5", (7, 0) -> "7".
inline std::string to_decimal_string(const Value& mantissa, unsigned scale_digits) {
  const bool negative = mantissa < 0;
  std::string digits = abs_value(mantissa).str();
  if (scale_digits == 0) return negative ? "-" + digits : digits;
  if (digits.size() <= scale_digits) digits.insert(0, scale_digits + 1 - digits.size(), '0');
  digits.insert(digits.size() - scale_digits, 1, '.');
  return negative ? "-" + digits : digits;
}

}  // namespace setpart
