#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "degen/cli.hpp"
#include "degen/serialize.hpp"

using namespace degen;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("degen_test_" + name);
}

}  // namespace

TEST_CASE("numbers") {
  const auto r = run({"--format", "csv", "numbers", "--lambda", "0", "--nmax", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n,value\n0,1\n1,-1/2\n2,0\n3,1/4\n4,0\n");

  const auto j = run({"numbers", "--d", "3", "--chi", "1", "--lambda", "1/2", "--nmax", "2"});
  CHECK(j.code == kExitOk);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["rows"][0]["value"] == "-2");
  CHECK(parsed["rows"][2]["value"] == "4");
  CHECK(parsed["lambda"] == "1/2");
}

TEST_CASE("poly, rsum and chars") {
  auto r = run({"--format", "csv", "poly", "--d", "1", "--chi", "0", "--lambda", "1/2", "--n", "1", "--x", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n,x,value\n1,2,3/2\n");

  r = run({"--format", "csv", "rsum", "--k", "1", "--n", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "k,n,value\n1,3,-4\n");

  r = run({"chars", "--d", "9"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][1]["values"][2] == Json::parse(R"({"order":6,"coeffs":["0","1"]})"));
  CHECK(j["rows"][3]["conductor"] == 3);
  CHECK(j["rows"][0]["primitive"] == false);

  CHECK(run({"chars", "--d", "8"}).code == kExitUsage);
  CHECK(run({"--format", "latex", "chars", "--d", "5"}).out.find("\\zeta_{4}") != std::string::npos);
}

TEST_CASE("padic") {
  const auto r = run({"padic", "--f", "0,1", "--p", "3", "--N", "1..3"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["valuation"] == "1");
  CHECK(j["rows"][2]["valuation"] == "3");
  CHECK(j["rows"][2]["ok"] == true);
  CHECK(run({"padic", "--p", "9"}).code == kExitUsage);
  CHECK(run({"padic", "--N", "0..2"}).code == kExitUsage);
}

TEST_CASE("check exit codes") {
  auto r = run({"check", "thm2", "--d", "3", "--chi", "1", "--lambda", "1/2", "--w1", "3", "--w2", "1", "--x", "1/2",
                "--L", "5"});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("checked 1 parameter tuples, 0 failed") != std::string::npos);
  const Json j = Json::parse(r.out);
  CHECK(j["summary"]["holds"] == true);
  CHECK(j["reports"][0]["rows"].size() == 6);

  r = run({"check", "eq18", "--d", "3", "--n", "2"});
  CHECK(r.code == kExitUsage);

  r = run({"check", "thm1", "--d", "3", "--chi", "1", "--lambda", "1/2", "--w1", "3", "--w2", "1", "--L", "4",
           "--fault-degree", "2"});
  CHECK(r.code == kExitIdentityFailed);
  CHECK(r.err.find("first counterexample: thm1") != std::string::npos);
  CHECK(r.err.find("at degree 2") != std::string::npos);

  CHECK(run({"check", "nonsense"}).code == kExitUsage);
  CHECK(run({"check", "thm1", "--lambda", "0.5"}).code == kExitUsage);
  CHECK(run({"--format", "yaml", "numbers"}).code == kExitUsage);
  CHECK(run({"numbers", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("check list") {
  const auto r = run({"check", "list"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("i_series_consistency") != std::string::npos);
}

TEST_CASE("check output is byte-reproducible") {
  const std::vector<std::string> args{"--workers", "2", "check", "consistency", "--d", "5", "--lambda", "1/2,-2/3",
                                      "--x", "1/2", "--L", "4"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ns") == std::string::npos);
}

TEST_CASE("config file with flag overrides") {
  const auto cfg = temp_file("grid.cfg");
  const auto out = temp_file("out.json");
  {
    std::ofstream f(cfg);
    f << "# small grid\nd = 3\nchi = 1\nlambda = 1/2\nw1 = 1, 3\nw2 = 1\nx = 0\nL = 3\n";
  }
  auto r = run({"--config", cfg.string(), "--out", out.string(), "check", "thm1", "--lambda", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const Json j = Json::parse(in);
  CHECK(j["summary"]["total"] == 2);
  CHECK(j["reports"][0]["params"]["lambda"] == "3");

  r = run({"--config", cfg.string(), "check", "thm1", "--default-grid", "--d", "1", "--L", "2"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["summary"]["total"] == 4 * 3 * 3 * 3);

  {
    std::ofstream f(cfg);
    f << "colour = red\n";
  }
  CHECK(run({"--config", cfg.string(), "check", "thm1"}).code == kExitUsage);
  CHECK(run({"--config", "/nonexistent/grid.cfg", "check", "thm1"}).code == kExitUsage);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
