/**
 * @file test_sequence.cpp
 * @brief Sequence descriptors: symbol access, shift, prepend and Sturmian tails.
 */
#include <doctest.h>

#include "omega/error.hpp"
#include "omega/family/sturmian.hpp"
#include "omega/symbolic/sequence.hpp"
#include "oracles.hpp"

using namespace omega;
using namespace omega::symbolic;

namespace {

SturmianTail tail_of(const family::SturmianSpec& spec) { return SturmianTail(spec.slope, spec.intercept); }

Sequence sturmian(const family::SturmianSpec& spec) {
  return Sequence(Alphabet::binary(), {}, tail_of(spec));
}

}  // namespace

TEST_SUITE("sequence") {
  TEST_CASE("periodic extension and literal prefix") {
    const Sequence x = Sequence::periodic(parse_word("01"), parse_word("01"));
    CHECK(x.at(5) == 1);
    CHECK(x.take(0, 6) == parse_word("010101"));

    const Sequence y = Sequence::periodic({0}, {7}, Alphabet::finite(8));
    CHECK(y.at(0) == 7);
    CHECK(y.at(1) == 0);
  }

  TEST_CASE("default sequence is binary 0^omega") {
    const Sequence z;
    CHECK(z.alphabet() == Alphabet::binary());
    CHECK(z.take(0, 10) == Word(10, 0));
  }

  TEST_CASE("alphabet rules") {
    CHECK(Alphabet::binary().supports_shift_space());
    CHECK_FALSE(Alphabet::finite(1).supports_shift_space());
    CHECK(Alphabet::naturals().contains(1000000));
    CHECK_FALSE(Alphabet::naturals().size().has_value());
    CHECK_THROWS_AS((void)Alphabet::finite(0), Error);
    CHECK_THROWS_AS((void)Sequence::periodic({}), Error);
    CHECK_THROWS_AS((void)Sequence::periodic({2}), Error);
    CHECK_THROWS_AS((void)Sequence::periodic({0}, {5}), Error);
  }

  TEST_CASE("shift drops symbols") {
    const Sequence x = Sequence::periodic(parse_word("01"));
    CHECK(x.shifted(1).take(0, 6) == parse_word("101010"));
    CHECK(x.shifted(0).take(0, 6) == x.take(0, 6));

    const Sequence y = Sequence::periodic({1}, parse_word("0100"));
    const Sequence sy = shift(y, 3);
    CHECK(sy.prefix() == parse_word("0"));
    CHECK(sy.take(0, 5) == parse_word("01111"));
  }

  TEST_CASE("prepend puts the word first") {
    const Sequence x = Sequence::periodic(parse_word("01"));
    CHECK(prepend({}, x).take(0, 8) == x.take(0, 8));
    const Word w = parse_word("111");
    CHECK(prepend(w, x).take(0, 9) == parse_word("111010101"));
  }

  TEST_CASE("property: shift(prepend(w, x), |w|) equals x") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const Sequence x = Sequence::periodic(rng.nonempty_word(7), rng.word(rng.below(6)));
      const Word w = rng.word(rng.below(20));
      const Sequence back = shift(prepend(w, x), w.size());
      CHECK(back.take(0, 200) == x.take(0, 200));
      CHECK(prepend(w, x).take(0, w.size()) == w);
    }
  }

  TEST_CASE("property: fill agrees with at and shift composes") {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const Sequence x = Sequence::periodic(rng.nonempty_word(9), rng.word(rng.below(9)));
      const Index start = rng.below(50);
      Word out(64);
      x.fill(start, out);
      for (Index i = 0; i < out.size(); ++i) CHECK(out[i] == x.at(start + i));
      const Index j = rng.below(30);
      const Index k = rng.below(30);
      CHECK(x.shifted(j).shifted(k).take(0, 40) == x.shifted(j + k).take(0, 40));
    }
  }

  TEST_CASE("Fibonacci word prefix") {
    const Sequence fib = sturmian(family::fibonacci_spec());
    CHECK(fib.take(0, 8) == parse_word("01001010"));
  }

  TEST_CASE("Sturmian symbols match the exact integer oracle") {
    struct Surd {
      std::int64_t p, q;
      std::uint64_t m;
      std::int64_t r;
    };
    // Fibonacci, silver, frac(sqrt 3), frac(sqrt 7), frac(sqrt 4999).
    for (const Surd s : {Surd{3, -1, 5, 2}, Surd{-1, 1, 2, 1}, Surd{-1, 1, 3, 1}, Surd{-2, 1, 7, 1},
                         Surd{-70, 1, 4999, 1}}) {
      const family::QuadraticSlope slope{s.p, s.q, s.m, s.r};
      const Sequence x = sturmian(family::spec_from_surd(slope));
      const Word expected = oracle::sturmian_word(s.p, s.q, s.m, s.r, 10000);
      CHECK(x.take(0, 10000) == expected);
    }
  }

  TEST_CASE("Sturmian shift is an offset") {
    const Sequence fib = sturmian(family::fibonacci_spec());
    CHECK(fib.shifted(1234).take(0, 500) == fib.take(1234, 500));
  }

  TEST_CASE("Sturmian letter frequency tends to the slope") {
    const Sequence sil = sturmian(family::silver_spec());
    const Word w = sil.take(0, 10000);
    Index ones = 0;
    for (const Symbol s : w) ones += s;
    CHECK(static_cast<double>(ones) / 10000.0 == doctest::Approx(0.41421356).epsilon(0.001));
  }

  TEST_CASE("rational or out-of-range slopes are rejected") {
    const auto reject = [](const char* slope, const char* intercept) {
      try {
        (void)SturmianTail(Decimal::parse(slope), Decimal::parse(intercept));
        return false;
      } catch (const Error& e) {
        return e.kind() == ErrorKind::validation;
      }
    };
    CHECK(reject("0.5", "0"));
    CHECK(reject("0.25", "0.1"));
    CHECK(reject("0", "0"));
    CHECK(reject("1", "0"));
    CHECK(reject("1.5", "0"));
    CHECK(reject("0.4142135623730950488016887242096980785696", "1"));
    CHECK_FALSE(reject("0.4142135623730950488016887242096980785696", "0"));
  }

  TEST_CASE("precision defaults to 64 bits") {
    CHECK(configured_precision_bits() == 64);
    CHECK(tail_of(family::fibonacci_spec()).precision_bits() == 64);
  }

  TEST_CASE("decimal parsing and continued fraction probe") {
    CHECK(Decimal::parse("0.125").value() == Rational(1, 8));
    CHECK(Decimal::parse(".5").value() == Rational(1, 2));
    CHECK(Decimal::parse("007.50").value() == Rational(15, 2));
    CHECK_THROWS_AS((void)Decimal::parse("1e5"), Error);
    CHECK_THROWS_AS((void)Decimal::parse("-0.5"), Error);
    CHECK(Decimal::from_rational(Rational(1, 3), 5).text() == "0.33333");
    CHECK(exact_decimal_string(Rational(3, 40)) == "0.075");
    CHECK_THROWS_AS((void)exact_decimal_string(Rational(1, 3)), Error);

    const auto half = probe_continued_fraction(Rational(1, 2), 32, BigInt(1) << 32);
    CHECK(half.terminated);
    const auto sil = probe_continued_fraction(family::silver_spec().slope.value(), 32, BigInt(1) << 32);
    CHECK_FALSE(sil.terminated);
    CHECK_FALSE(sil.huge_quotient);
    CHECK(sil.terms == 32);
  }
}
