#include "omega/family/sturmian.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "omega/error.hpp"

namespace omega::family {
namespace {

BigInt pow10(unsigned digits) {
  BigInt out = 1;
  for (unsigned i = 0; i < digits; ++i) out *= 10;
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

BigInt QuadraticSlope::scaled_floor(unsigned digits) const {
  if (r <= 0) throw Error(ErrorKind::invalid_argument, "quadratic slope needs r > 0");
  if (q == 0) throw Error(ErrorKind::invalid_argument, "quadratic slope needs q != 0");
  const BigInt root_m = boost::multiprecision::sqrt(BigInt(m));
  if (root_m * root_m == BigInt(m)) {
    throw Error(ErrorKind::invalid_argument, "m = " + std::to_string(m) + " is a perfect square");
  }
  const BigInt scale = pow10(digits);
  // floor(q sqrt(m) 10^d) from the integer square root of q^2 m 10^{2d}.
  const BigInt radicand = BigInt(q) * BigInt(q) * BigInt(m) * scale * scale;
  const BigInt root = boost::multiprecision::sqrt(radicand);
  BigInt surd_floor = root;
  if (q < 0) surd_floor = -(root + (root * root == radicand ? 0 : 1));
  return floor_div(BigInt(p) * scale + surd_floor, BigInt(r));
}

Decimal QuadraticSlope::to_decimal(unsigned digits) const {
  const BigInt scaled = scaled_floor(digits);
  if (scaled < 0) throw Error(ErrorKind::invalid_argument, "quadratic slope is negative");
  return Decimal::from_rational(Rational(scaled, pow10(digits)), digits);
}

void SturmianSpec::validate() const { (void)symbolic::SturmianTail(slope, intercept); }

SturmianSpec spec_from_surd(const QuadraticSlope& surd) {
  SturmianSpec spec;
  spec.slope = surd.to_decimal();
  spec.intercept = spec.slope;
  spec.defining = surd;
  spec.validate();
  return spec;
}

SturmianSpec fibonacci_spec() { return spec_from_surd({3, -1, 5, 2}); }

SturmianSpec silver_spec() { return spec_from_surd({-1, 1, 2, 1}); }

SturmianSpec preset_spec(const std::string& name) {
  if (name == "fibonacci") return fibonacci_spec();
  if (name == "silver") return silver_spec();
  throw Error(ErrorKind::invalid_argument, "unknown Sturmian preset '" + name + "' (expected fibonacci or silver)");
}

QuadraticSlope parse_quadratic(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(item);
  if (parts.size() != 4) throw Error(ErrorKind::parse, "quadratic slope must be 'p,q,m,r': " + text);
  try {
    std::size_t used = 0;
    auto whole = [&](const std::string& s) {
      if (used != s.size()) throw Error(ErrorKind::parse, "bad integer '" + s + "'");
    };
    QuadraticSlope out;
    out.p = std::stoll(parts[0], &used);
    whole(parts[0]);
    out.q = std::stoll(parts[1], &used);
    whole(parts[1]);
    if (parts[2].starts_with('-')) throw Error(ErrorKind::parse, "m must be non-negative");
    out.m = std::stoull(parts[2], &used);
    whole(parts[2]);
    out.r = std::stoll(parts[3], &used);
    whole(parts[3]);
    return out;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::parse, "quadratic slope must be 'p,q,m,r': " + text);
  }
}

Sequence sturmian_sequence(const SturmianSpec& spec) {
  return Sequence(symbolic::Alphabet::binary(), {}, symbolic::SturmianTail(spec.slope, spec.intercept));
}

}  // namespace omega::family
