#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "kohn/error.hpp"

namespace kohn {

/// Arbitrary precision integer used by every public value type.
using Integer = boost::multiprecision::cpp_int;

namespace detail {

template <class T>
inline constexpr bool is_fixed_width_v = std::is_integral_v<T> || std::is_same_v<T, __int128>;

}  // namespace detail

// Checked ring operations. For fixed-width types they throw OverflowError
// instead of wrapping; for Integer they are the plain operators.

template <class T>
inline T checked_add(const T& a, const T& b) {
  if constexpr (detail::is_fixed_width_v<T>) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
  } else {
    return a + b;
  }
}

template <class T>
inline T checked_sub(const T& a, const T& b) {
  if constexpr (detail::is_fixed_width_v<T>) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
  } else {
    return a - b;
  }
}

template <class T>
inline T checked_mul(const T& a, const T& b) {
  if constexpr (detail::is_fixed_width_v<T>) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
  } else {
    return a * b;
  }
}

/// Narrow a 128-bit accumulator back to int64, throwing on loss.
inline std::int64_t narrow_i64(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

template <class T>
inline Integer to_integer(const T& v) {
  if constexpr (std::is_same_v<T, __int128>) {
    // cpp_int has no __int128 constructor on every boost version.
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<std::uint64_t>(u >> 64);
    Integer r = (hi << 64) + static_cast<std::uint64_t>(u);
    return neg ? Integer(-r) : r;
  } else {
    return Integer(v);
  }
}

inline std::string to_decimal(const Integer& v) { return v.str(); }

inline Integer parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("bad integer literal: " + text);
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("bad integer literal: " + text);
  return Integer(text);
}

/// Binomial coefficient C(n, r) for small arguments; 0 when r < 0 or r > n.
inline Integer binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Integer acc = 1;
  for (long i = 1; i <= r; ++i) {
    acc *= (n - r + i);
    acc /= i;
  }
  return acc;
}

}  // namespace kohn
