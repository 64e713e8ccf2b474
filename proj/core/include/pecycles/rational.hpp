#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pecycles {

// All arithmetic in the library is exact. Coefficients, degrees and slopes
// are arbitrary-precision rationals; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_str(const Rat& r);

/// Parses "p", "-p", "p/q" or "-p/q" (no whitespace, q > 0 after sign
/// normalization). Throws ParseError on anything else, including "p/0".
Rat rat_parse(std::string_view text);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

/// Smallest integer >= r.
Int rat_ceil(const Rat& r);

}  // namespace pecycles
