#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using fusion_gerbe::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("fusion subcommand") {
  const CliRun r = run({"fusion", "--level", "4", "--lambda", "1", "--mu", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "nu  n  geometric  verlinde"));
  CHECK(contains(r.out, " 1  1  yes"));
  CHECK(contains(r.out, " 3  1  yes"));
  CHECK_FALSE(contains(r.out, " 2  1"));

  const CliRun single = run({"fusion", "--level", "4", "--lambda", "0", "--mu", "3"});
  CHECK(single.code == 0);
  CHECK(contains(single.out, " 3  1  yes"));

  const CliRun js =
      run({"--format", "json", "fusion", "--level", "4", "--lambda", "1", "--mu", "2"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["level"] == 4);
  CHECK(doc["lambda"] == 1);
  CHECK(doc["mu"] == 2);
  CHECK(doc["coefficients"].size() == 2);
  CHECK(doc["coefficients"][0]["nu"] == 1);
  CHECK(doc["coefficients"][0]["n"] == 1);
  CHECK(doc["coefficients"][0]["geometric"] == true);
  CHECK(doc["coefficients"][0]["verlinde"] == 1);
  // stable key order
  CHECK(js.out.find("\"schema_version\"") < js.out.find("\"level\""));
  CHECK(js.out.find("\"level\"") < js.out.find("\"lambda\""));

  const CliRun csv =
      run({"--format", "csv", "fusion", "--level", "4", "--lambda", "1", "--mu", "2"});
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "nu,n,geometric,verlinde\n1,1,true,1\n3,1,true,1\n"));
}

TEST_CASE("fusion rejects bad input with exit 2") {
  CHECK(run({"fusion", "--level", "4", "--lambda", "7", "--mu", "0"}).code == 2);
  CHECK(run({"fusion", "--level", "4", "--lambda", "1"}).code == 2);
  CHECK(run({"fusion", "--level", "-2", "--lambda", "1", "--mu", "1"}).code == 2);
  CHECK(run({"--format", "yaml", "fusion", "--level", "4", "--lambda", "1", "--mu",
             "1"})
            .code == 2);
  CHECK(run({"no-such-command"}).code == 2);
}

TEST_CASE("verify subcommand") {
  const CliRun r = run({"verify", "--max-level", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "k=4: |V|=35 |V_G|=35 agree"));
  CHECK(contains(r.out, "V = V_G verified for k = 1..4"));
  CHECK(contains(r.err, "done in"));  // timing goes to the diagnostic stream

  // the rejected interior branch must fail loudly
  const CliRun bad = run({"verify", "--max-level", "4", "--interior-epsilon", "1"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "DISAGREE"));

  const CliRun js = run({"--format", "json", "verify", "--max-level", "3"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["all_agree"] == true);
  CHECK(doc["results"].size() == 3);
}

TEST_CASE("verify output bytes do not depend on the worker count") {
  const CliRun w1 = run({"--workers", "1", "verify", "--max-level", "5"});
  const CliRun w4 = run({"--workers", "4", "verify", "--max-level", "5"});
  CHECK(w1.code == 0);
  CHECK(w4.code == 0);
  CHECK(w1.out == w4.out);
}

TEST_CASE("polytope subcommand") {
  const CliRun r = run({"polytope", "--level", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "integer_points=45 fusion_points=35"));

  const CliRun r1 = run({"polytope", "--level", "1"});
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "integer_points=4 fusion_points=4"));

  const std::string path = "polytope_test_out.json";
  const CliRun w = run({"polytope", "--level", "4", "--out", path});
  CHECK(w.code == 0);
  std::ifstream file(path);
  REQUIRE(file.good());
  const auto doc = nlohmann::json::parse(file);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["level"] == 4);
  CHECK(doc["counts"]["integer_points"] == 45);
  CHECK(doc["counts"]["fusion_points"] == 35);
  CHECK(doc["integer_points"].size() == 45);
  CHECK(doc["fusion_points"].size() == 35);
  const auto vertices = doc["vertices"];
  REQUIRE(vertices.size() == 4);
  CHECK(vertices[0] == nlohmann::json({0, 0, 0}));
  CHECK(vertices[1] == nlohmann::json({4, 4, 0}));
  CHECK(vertices[2] == nlohmann::json({4, 0, 4}));
  CHECK(vertices[3] == nlohmann::json({0, 4, 4}));
  // every fusion point is an integer point marked as such
  int fusion_marked = 0;
  for (const auto& p : doc["integer_points"])
    if (p["fusion"].get<bool>()) ++fusion_marked;
  CHECK(fusion_marked == 35);
  std::remove(path.c_str());

  CHECK(run({"polytope", "--level", "4", "--out", "/no/such/dir/x.json"}).code == 1);
}

TEST_CASE("FUSION_GERBE_WORKERS provides the worker default") {
  setenv("FUSION_GERBE_WORKERS", "3", 1);
  const CliRun r = run({"verify", "--max-level", "5"});
  unsetenv("FUSION_GERBE_WORKERS");
  CHECK(r.code == 0);
  const CliRun plain = run({"verify", "--max-level", "5"});
  CHECK(r.out == plain.out);
}

TEST_CASE("geometry-check subcommand") {
  const CliRun r = run({"--seed", "7", "geometry-check", "--level", "4", "--samples",
                        "10"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "junction"));
  CHECK(contains(r.out, "face-signs"));
  CHECK(contains(r.out, "omega"));
  CHECK(contains(r.out, "polyakov-wiegmann"));
  CHECK(contains(r.out, "period"));
  CHECK(contains(r.out, "connection"));
  CHECK(contains(r.out, "geometry-check passed"));

  // byte determinism across worker counts at a fixed seed
  const CliRun a = run({"--seed", "11", "--workers", "1", "geometry-check", "--level",
                        "4", "--samples", "8"});
  const CliRun b = run({"--seed", "11", "--workers", "3", "geometry-check", "--level",
                        "4", "--samples", "8"});
  CHECK(a.out == b.out);

  // an absurd tolerance forces a failure and an offending sample report
  const CliRun f = run({"--seed", "7", "--tolerance", "junction=1e-18",
                        "geometry-check", "--level", "4", "--samples", "5"});
  CHECK(f.code == 1);
  CHECK(contains(f.out, "FAIL"));
  CHECK(contains(f.out, "offending sample"));

  CHECK(run({"geometry-check", "--samples", "0"}).code == 2);
  CHECK(run({"--tolerance", "junk", "geometry-check"}).code == 2);
}
