#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace compomat {

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator, which is exactly the canonical form the serialization needs.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p" or "p/q" (optional leading '-'). Throws Err::ParseError on
// malformed input or q == 0.
Rational rat_parse(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rational& r);

double rat_double(const Rational& r);

}  // namespace compomat
