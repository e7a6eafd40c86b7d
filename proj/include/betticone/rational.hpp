#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace betticone {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string format_rational(const Rational& value);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Integer binomial(long long n, long long k);

/// Comma separated list of rationals, e.g. "1,2,1" or "1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

}  // namespace betticone
