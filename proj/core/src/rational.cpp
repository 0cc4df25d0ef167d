#include "omega/rational.hpp"

#include <algorithm>
#include <cctype>

#include "omega/error.hpp"

namespace omega {

Rational pow2_inv(std::uint64_t k) {
  BigInt den = 1;
  den <<= static_cast<unsigned>(k);
  return Rational(BigInt(1), den);
}

Rational dyadic(const BigInt& num, std::uint64_t pow2) {
  BigInt den = 1;
  den <<= static_cast<unsigned>(pow2);
  return Rational(num, den);
}

bool is_dyadic(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  return den > 0 && (den & (den - 1)) == 0;
}

DyadicParts dyadic_parts(const Rational& r) {
  if (!is_dyadic(r)) {
    throw Error(ErrorKind::validation, "value " + to_string(r) + " is not a dyadic rational");
  }
  DyadicParts out;
  out.numerator = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  out.pow2 = den == 1 ? 0 : boost::multiprecision::msb(den);
  return out;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::parse, "empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::parse, "malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorKind::parse, "malformed integer '" + s + "'");
    }
  }
  // Boost reads a leading 0 as an octal prefix.
  const std::size_t first = std::min(s.find_first_not_of('0', start), s.size() - 1);
  BigInt v(s.substr(first));
  return s[0] == '-' ? BigInt(-v) : v;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den <= 0) throw Error(ErrorKind::parse, "non-positive denominator in '" + text + "'");
  return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace omega
