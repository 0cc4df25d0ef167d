#include "omega/symbolic/decimal.hpp"

#include <cctype>

#include "omega/error.hpp"

namespace omega::symbolic {

namespace {

BigInt pow10(unsigned k) {
  BigInt v = 1;
  for (unsigned i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

Decimal Decimal::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::parse, "empty decimal string");
  std::string int_part;
  std::string frac_part;
  bool seen_dot = false;
  for (char ch : text) {
    if (ch == '.') {
      if (seen_dot) throw Error(ErrorKind::parse, "malformed decimal '" + std::string(text) + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_dot ? frac_part : int_part) += ch;
    } else {
      throw Error(ErrorKind::parse, "malformed decimal '" + std::string(text) + "'");
    }
  }
  if (int_part.empty() && frac_part.empty()) {
    throw Error(ErrorKind::parse, "malformed decimal '" + std::string(text) + "'");
  }
  if (seen_dot && frac_part.empty()) {
    throw Error(ErrorKind::parse, "malformed decimal '" + std::string(text) + "'");
  }
  BigInt num = parse_integer(int_part.empty() ? std::string("0") : int_part);
  const auto digits = static_cast<unsigned>(frac_part.size());
  num *= pow10(digits);
  if (!frac_part.empty()) num += parse_integer(frac_part);

  Decimal d;
  d.text_ = std::string(text);
  d.value_ = Rational(num, pow10(digits));
  return d;
}

Decimal Decimal::from_rational(const Rational& value, unsigned digits) {
  if (value < 0) throw Error(ErrorKind::invalid_argument, "negative decimal");
  const BigInt scale = pow10(digits);
  const BigInt scaled = boost::multiprecision::numerator(value) * scale /
                        boost::multiprecision::denominator(value);
  const BigInt int_part = scaled / scale;
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) {
    frac.insert(0, digits - frac.size(), '0');
    return parse(int_part.str() + "." + frac);
  }
  return parse(int_part.str());
}

UInt128 Decimal::fraction_bits(unsigned bits) const {
  if (bits == 0 || bits > 128) throw Error(ErrorKind::invalid_argument, "precision bits must be in [1,128]");
  const BigInt num = boost::multiprecision::numerator(value_);
  const BigInt den = boost::multiprecision::denominator(value_);
  BigInt frac = num % den;
  frac <<= 128;
  frac /= den;
  UInt128 out = 0;
  // BigInt -> two 64-bit limbs.
  const BigInt mask64 = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>(frac & mask64);
  const auto hi = static_cast<std::uint64_t>((frac >> 64) & mask64);
  out = (static_cast<UInt128>(hi) << 64) | lo;
  if (bits < 128) {
    const UInt128 keep = ~((static_cast<UInt128>(1) << (128 - bits)) - 1);
    out &= keep;
  }
  return out;
}

std::string exact_decimal_string(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  unsigned digits = 0;
  BigInt scale = 1;
  while ((num * scale) % den != 0) {
    scale *= 10;
    if (++digits > 4096) throw Error(ErrorKind::invalid_argument, "value has no finite decimal expansion");
  }
  const BigInt scaled = num * scale / den;
  const BigInt int_part = scaled / scale;
  std::string out = (negative ? "-" : "") + int_part.str();
  if (digits > 0) {
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, digits - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

ContinuedFractionProbe probe_continued_fraction(const Rational& x, std::size_t limit, const BigInt& cap) {
  ContinuedFractionProbe probe;
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  // Drop a_0.
  num %= den;
  while (probe.terms < limit) {
    if (num == 0) {
      probe.terminated = true;
      return probe;
    }
    // x = num/den in (0,1): next quotient is floor(den/num).
    const BigInt q = den / num;
    const BigInt r = den % num;
    ++probe.terms;
    if (q > cap) {
      probe.huge_quotient = true;
      return probe;
    }
    den = num;
    num = r;
  }
  return probe;
}

}  // namespace omega::symbolic
