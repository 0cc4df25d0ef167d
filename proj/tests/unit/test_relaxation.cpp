/**
 * @file test_relaxation.cpp
 * @brief Window length for a target distance.
 */
#include <doctest.h>

#include "omega/error.hpp"
#include "omega/spec/relaxation.hpp"
#include "oracles.hpp"

using namespace omega;
using symbolic::Index;
using symbolic::Word;

TEST_SUITE("relaxation") {
  TEST_CASE("reference values") {
    CHECK(spec::relaxation_time(Rational(1, 8)) == 5);
    CHECK(spec::relaxation_time(Rational(1, 32)) == 7);
    CHECK(spec::relaxation_time(Rational(4)) == 1);
    CHECK(spec::relaxation_time(Rational(1)) == 2);
  }

  TEST_CASE("non-positive delta is rejected") {
    for (const Rational d : {Rational(0), Rational(-1, 4)}) {
      try {
        (void)spec::relaxation_time(d);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_argument);
      }
    }
  }

  TEST_CASE("property: matches upward count on random rationals") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
      const Rational delta(static_cast<long long>(rng.between(1, 5000)), static_cast<long long>(rng.between(1, 1 << 20)));
      const Index n = spec::relaxation_time(delta);
      CHECK(n == oracle::brute_relaxation(delta));
      CHECK(2 * pow2_inv(n) < delta);
      if (n > 1) CHECK_FALSE(2 * pow2_inv(n - 1) < delta);
    }
  }

  TEST_CASE("agreement on N symbols forces distance below delta") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
      const Rational delta = pow2_inv(rng.below(20));
      const Index n = spec::relaxation_time(delta);
      Word x = rng.word(n);
      Word y = x;
      // Worst case: every later symbol differs.
      for (int i = 0; i < 60; ++i) {
        x.push_back(0);
        y.push_back(1);
      }
      CHECK(oracle::partial_distance(x, y) < delta);
    }
  }
}
