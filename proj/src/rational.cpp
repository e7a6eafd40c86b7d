#include "betticone/rational.hpp"

#include "betticone/error.hpp"

#include <cctype>

namespace betticone {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonIncreasingDegrees: return "NonIncreasingDegrees";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::CollapsedSurvivor: return "CollapsedSurvivor";
    case ErrorCode::NoCollapsibleWindow: return "NoCollapsibleWindow";
    case ErrorCode::NotInConeCandidate: return "NotInConeCandidate";
    case ErrorCode::NotOnHyperplane: return "NotOnHyperplane";
    case ErrorCode::DegenerateSequence: return "DegenerateSequence";
    case ErrorCode::NotFiniteLength: return "NotFiniteLength";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotFiniteLengthWithinBox: return "NotFiniteLengthWithinBox";
    case ErrorCode::KernelNotFinitelyResolvedInBox: return "KernelNotFinitelyResolvedInBox";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (s[pos] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const Rational& r : parse_rational_list(text)) {
    if (boost::multiprecision::denominator(r) != 1) {
      throw Error(ErrorCode::ParseError, "expected integers in '" + std::string(text) + "'");
    }
    const Integer n = boost::multiprecision::numerator(r);
    if (n > 1'000'000'000 || n < -1'000'000'000) {
      throw Error(ErrorCode::ParseError, "integer out of range in '" + std::string(text) + "'");
    }
    out.push_back(n.convert_to<int>());
  }
  return out;
}

}  // namespace betticone
