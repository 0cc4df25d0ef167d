/**
 * @file test_run_config.cpp
 * @brief Run configuration parsing and validation.
 */
#include <doctest.h>

#include "omega/error.hpp"
#include "omega/report/run_config.hpp"

using namespace omega;
using namespace omega::report;
using io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::io;
}

}  // namespace

TEST_SUITE("run_config") {
  TEST_CASE("defaults") {
    const RunConfig c;
    const auto p = derive(c);
    CHECK(p.epsilon == Rational(1, 4));
    CHECK(resolved_depths(c, p) == std::vector<Index>{39, 78});
    CHECK_NOTHROW(validate(c, p));
    CHECK(recurrence(c).horizon == 100000);
    CHECK(c.instance.xi.take(0, 6) == symbolic::parse_word("011011"));
  }

  TEST_CASE("keys overlay the base") {
    const RunConfig c = config_from_json(Json::parse(R"({"depths": [13, 26], "seed": 3, "P": 9, "D": "1/2"})"));
    CHECK(c.depths == std::vector<Index>{13, 26});
    CHECK(c.seed == 3);
    CHECK(c.P == std::optional<Index>(9));
    CHECK(c.D == Rational(1, 2));
    CHECK(c.horizon == 100000);
    const auto p = derive(c);
    CHECK(p.stride() == p.N + 9);
  }

  TEST_CASE("round trip") {
    RunConfig c;
    c.seed = 42;
    c.depths = {26};
    c.epsilon = Rational(1, 8);
    const RunConfig back = config_from_json(config_to_json(c));
    CHECK(back.seed == 42);
    CHECK(back.depths == c.depths);
    CHECK(back.epsilon == c.epsilon);
    CHECK(config_to_json(back) == config_to_json(c));
  }

  TEST_CASE("custom instance") {
    const Json j = Json::parse(R"({"instance": {
      "t0": {"alphabet": {"kind": "finite", "size": 2}, "prefix": [], "tail": {"kind": "periodic", "word": [0]}},
      "t1": {"alphabet": {"kind": "finite", "size": 2}, "prefix": [], "tail": {"kind": "periodic", "word": [1]}},
      "s":  {"alphabet": {"kind": "finite", "size": 2}, "prefix": [], "tail": {"kind": "periodic", "word": [0, 1]}},
      "xi": {"alphabet": {"kind": "finite", "size": 2}, "prefix": [], "tail": {"kind": "periodic", "word": [0, 0, 1]}}}})");
    const RunConfig c = config_from_json(j);
    CHECK(c.instance.xi.take(0, 3) == symbolic::parse_word("001"));
  }

  TEST_CASE("rejections") {
    CHECK(kind_of([] { (void)config_from_json(Json::parse(R"({"horizon2": 5})")); }) == ErrorKind::parse);
    CHECK(kind_of([] { (void)config_from_json(Json::parse("[1]")); }) == ErrorKind::parse);
    CHECK(kind_of([] { (void)config_from_json(Json::parse(R"({"D": "1/3"})")); }) == ErrorKind::validation);
    CHECK(kind_of([] { (void)config_from_json(Json::parse(R"({"instance": "other"})")); }) ==
          ErrorKind::validation);
    CHECK(kind_of([] { (void)config_from_json(Json::parse(R"({"seed": "x"})")); }) == ErrorKind::parse);
  }

  TEST_CASE("validation of horizon and depths") {
    RunConfig c;
    const auto p = derive(c);
    c.depths = {769};
    CHECK_NOTHROW(validate(c, p));
    c.depths = {769, 770};
    CHECK(kind_of([&] { validate(c, p); }) == ErrorKind::validation);
    c.depths = {0};
    CHECK(kind_of([&] { validate(c, p); }) == ErrorKind::validation);
  }

  TEST_CASE("parse_depths") {
    CHECK(parse_depths("13,26") == std::vector<Index>{13, 26});
    CHECK(parse_depths("7") == std::vector<Index>{7});
    for (const char* bad : {"", "a", "1,,2", "-3", "1;2"}) {
      CHECK(kind_of([&] { (void)parse_depths(bad); }) == ErrorKind::parse);
    }
  }
}
