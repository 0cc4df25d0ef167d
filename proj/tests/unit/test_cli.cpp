/**
 * @file test_cli.cpp
 * @brief Command-line driver: outputs and exit codes.
 */
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "omega/tools/cli.hpp"

using namespace omega::tools;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "omega_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string error_kind(const Run& r) { return Json::parse(r.err)["error"]["kind"].get<std::string>(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("params prints the derived constants") {
    const Run r = run({"params"});
    CHECK(r.code == kExitPass);
    const Json j = Json::parse(r.out);
    CHECK(j["N"] == 5);
    CHECK(j["P"] == 8);
    CHECK(j["M"] == 7);
    CHECK(j["depths"] == Json::array({39, 78}));
  }

  TEST_CASE("global flags before or after the subcommand") {
    CHECK(Json::parse(run({"--depths", "13", "params"}).out)["depths"] == Json::array({13}));
    CHECK(Json::parse(run({"params", "--depths", "13,26"}).out)["depths"] == Json::array({13, 26}));
  }

  TEST_CASE("usage errors exit 2 with an error object") {
    const Run none = run({});
    CHECK(none.code == kExitUsage);
    CHECK(error_kind(none) == "usage");
    CHECK(run({"params", "--bogus"}).code == kExitUsage);
    CHECK(run({"dance"}).code == kExitUsage);
    const Run depth = run({"params", "--depths", "20000"});
    CHECK(depth.code == kExitUsage);
    CHECK(error_kind(depth) == "validation");
    const Run missing = run({"params", "--config", "/nonexistent/config.json"});
    CHECK(missing.code == kExitUsage);
    CHECK(error_kind(missing) == "io");
  }

  TEST_CASE("family") {
    const Run ok = run({"family", "--count", "3", "--seed", "7"});
    CHECK(ok.code == kExitPass);
    CHECK(Json::parse(ok.out)["members"].size() == 3);
    CHECK(run({"family", "--count", "3", "--seed", "7"}).out == ok.out);
    const Run one = run({"family", "--count", "1"});
    CHECK(one.code == kExitUsage);
    CHECK(error_kind(one) == "invalid_argument");
    const Run wide = run({"family", "--count", "2", "--separation", "0.9"});
    CHECK(wide.code == kExitUsage);
    CHECK(error_kind(wide) == "infeasible");
  }

  TEST_CASE("construct rejects ambiguous or rational slopes") {
    CHECK(run({"construct", "--preset", "fibonacci", "--slope", "0.3"}).code == kExitUsage);
    CHECK(run({"construct"}).code == kExitUsage);
    const Run half = run({"construct", "--slope", "0.5"});
    CHECK(half.code == kExitUsage);
    CHECK(error_kind(half) == "validation");
  }

  TEST_CASE("construct then verify") {
    const auto dir = scratch();
    const std::string fib = (dir / "fib.json").string();
    const std::string sil = (dir / "sil.json").string();
    CHECK(run({"construct", "--preset", "fibonacci", "--out", fib}).code == kExitPass);
    const Run made = run({"construct", "--quadratic", "-1,1,2,1", "--id", "silver", "--out", sil, "--json"});
    CHECK(made.code == kExitPass);
    CHECK(Json::parse(made.out)["id"] == "silver");

    const Run ok = run({"verify", fib, sil});
    CHECK(ok.code == kExitPass);
    const Json report = Json::parse(ok.out);
    CHECK(report["passed"] == true);
    CHECK(report["reports"].size() == 1);

    CHECK(run({"verify", fib, sil, "--depths", "13,26"}).code == kExitVerificationFailure);
    CHECK(run({"verify", fib, fib}).code == kExitVerificationFailure);
    CHECK(run({"verify", fib}).code == kExitUsage);
    CHECK(run({"verify", fib, sil, "--horizon", "200000"}).code == kExitUsage);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("lemma suite and fault injection") {
    const Run ok = run({"lemma-suite", "--seed", "7", "--filter", "closeness,prepend"});
    CHECK(ok.code == kExitPass);
    CHECK(Json::parse(ok.out)["results"].size() == 2);

    const auto dir = scratch();
    const auto cfg = dir / "fault.json";
    {
      std::ofstream f(cfg);
      f << R"({"epsilon": "4"})";
    }
    const Run bad = run({"lemma-suite", "--config", cfg.string(), "--filter", "e_disjointness"});
    CHECK(bad.code == kExitVerificationFailure);
    const Json j = Json::parse(bad.out);
    CHECK(j["passed"] == false);
    CHECK_FALSE(j["results"][0]["counterexample"].is_null());
    CHECK(run({"lemma-suite", "--filter", "nope"}).code == kExitUsage);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("out file and human summary") {
    const auto dir = scratch();
    const auto path = dir / "params.json";
    const Run r = run({"params", "--out", path.string()});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("epsilon 1/4") != std::string::npos);
    std::ifstream f(path);
    CHECK(Json::parse(f)["N"] == 5);
    std::filesystem::remove_all(dir);
  }
}
