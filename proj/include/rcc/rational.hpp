#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace rcc {

// All invariants are exact: arbitrary-precision integers and fractions in
// lowest terms with positive denominator. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// "p/q" in lowest terms, or just "p" when q == 1.
std::string rat_str(const Rat& r);

// Accepts "p", "p/q", or a mixed "w+p/q" (handy in tests for values the
// source material writes as mixed fractions).
Rat parse_rat(std::string_view s);

} // namespace rcc
