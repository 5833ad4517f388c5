#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace exnet {

using Rational = mpq_class;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(double x);

/// Parses "p/q", "p" or a decimal literal ("0.25" becomes 1/4 exactly).
Rational parse_rational(std::string_view text);

template <class T>
T from_ratio(long num, long den) {
  if constexpr (is_exact_v<T>) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

template <class T>
T from_count(std::uint64_t count) {
  if constexpr (is_exact_v<T>) {
    return Rational(static_cast<unsigned long>(count));
  } else {
    return static_cast<double>(count);
  }
}

// Equality is exact for rationals; `tol` is an absolute bound for doubles.
inline bool approx_equal(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
inline bool approx_equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool is_below(const Rational& a, const Rational& bound, double = 0.0) { return a < bound; }
inline bool is_below(double a, double bound, double tol) { return a < bound - tol; }

}  // namespace exnet
