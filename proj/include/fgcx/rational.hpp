#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace fgcx {

/// Exact rational. Circle positions and edge lengths are stored in units of
/// the full circle (1 == 2*pi).
using Rational = boost::rational<std::int64_t>;

// Compare and combine Rational only with Rational or std::int64_t: mixing in
// a plain int makes boost's comparison operators recurse under C++20
// rewritten-operator lookup.
inline const Rational kZero{0};
inline const Rational kOne{1};

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p/q" or an integer "p". Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

/// Largest integer n with n <= r.
std::int64_t floor(const Rational& r);

/// Least integer n with n >= r.
std::int64_t ceil(const Rational& r);

}  // namespace fgcx
