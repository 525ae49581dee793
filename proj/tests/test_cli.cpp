#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "json_schema_lite.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_bin() {
  const char* p = std::getenv("H4N_CLI_BIN");
  REQUIRE_MESSAGE(p != nullptr, "H4N_CLI_BIN must point at the command line binary");
  return p;
}

std::string schema_dir() {
  const char* p = std::getenv("H4N_SCHEMA_DIR");
  REQUIRE_MESSAGE(p != nullptr, "H4N_SCHEMA_DIR must point at the schema directory");
  return p;
}

/// Runs `prefix binary args` through the shell, captures stdout.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + "\"" + cli_bin() + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, got);
  int st = pclose(p);
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

json load_schema(const std::string& name) {
  std::ifstream in(schema_dir() + "/" + name + ".json");
  REQUIRE_MESSAGE(in.good(), "missing schema file for ", name);
  json j;
  in >> j;
  return j;
}

void check_against_schema(const std::string& name, const std::string& payload) {
  json doc = json::parse(payload);
  auto errors = schema_lite::validate(load_schema(name), doc);
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("exit codes for passing, deviating and misused invocations") {
  CHECK(run("verify --family h4n --n 1").exit_code == 0);
  CHECK(run("verify --family wh4n-dual --n 2").exit_code == 0);
  CHECK(run("green-table --family wh4n --n 1").exit_code == 0);
  // The weak dual table deviates from the bundled closed forms.
  CHECK(run("green-table --family wh4n-dual --n 1").exit_code == 1);
  CHECK(run("presentation --family wh4n-dual --n 2").exit_code == 1);

  CHECK(run("").exit_code == 2);                            // missing subcommand
  CHECK(run("frobnicate").exit_code == 2);                  // unknown subcommand
  CHECK(run("verify --badflag").exit_code == 2);            // unknown flag
  CHECK(run("verify --family nope").exit_code == 2);        // bad family
  CHECK(run("verify --n 0").exit_code == 2);                // out of range
  CHECK(run("verify --a 1/0").exit_code == 2);              // bad rational
  CHECK(run("verify --a kitten").exit_code == 2);           // bad rational
  CHECK(run("rmatrix --family wh4n").exit_code == 2);       // wrong family
  CHECK(run("tensor Q7 S0 --family h4n").exit_code == 2);   // unknown label
  CHECK(run("tensor S0 --family h4n").exit_code == 2);      // missing operand
  CHECK(run("decompose --family h4n").exit_code == 2);      // neither input
  CHECK(run("decompose --regular --input /nonexistent.json").exit_code == 2);
  CHECK(run("tensor P1 P1 --family h4n-dual --a 0").exit_code == 2);  // degenerate
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("json output validates against the bundled schemas") {
  struct Case {
    std::string schema;
    std::string args;
  };
  std::vector<Case> cases = {
      {"verify", "verify --family h4n --n 1 --format json"},
      {"verify", "verify --family wh4n --n 1 --format json"},
      {"rmatrix", "rmatrix --family h4n --n 1 --format json"},
      {"tensor", "tensor M1 M1 --family h4n --n 2 --format json"},
      {"decompose", "decompose --regular --family wh4n --n 1 --format json"},
      {"green-table", "green-table --family h4n-dual --n 2 --format json"},
      {"presentation", "presentation --family wh4n --n 1 --format json"},
      {"catalog", "catalog --family wh4n-dual --n 2 --format json"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.args);
    RunResult r = run(c.args);
    REQUIRE(!r.out.empty());
    check_against_schema(c.schema, r.out);
  }
}

TEST_CASE("sample rep input files validate against the input schema") {
  json rep = {
      {"family", "h4n"},
      {"n", 2},
      {"a", "1"},
      {"dim", 2},
      {"g", json::array({json::array({json::array({"0", "1"}), "0"}),
                         json::array({"0", "-1"})})},
      {"x", json::array({json::array({"0", "0"}), json::array({"1", "0"})})},
  };
  auto errors = schema_lite::validate(load_schema("rep-input"), rep);
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

TEST_CASE("frozen tensor decomposition through the command line") {
  RunResult r = run("tensor M1 M1 --family h4n --n 2 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["data"]["decomposition"] == "1*M2 + 1*M3");
  CHECK(j["data"]["product dim"] == "4");
  CHECK(j["table"]["rows"].size() == 2);
}

TEST_CASE("decompose accepts a module over the algebra from a json file") {
  // The 2-dimensional module with g = diag(q, q^2), x lowering: one copy of M1.
  json rep = {
      {"family", "h4n"},
      {"n", 2},
      {"dim", 2},
      {"g", json::array({json::array({json::array({"0", "1"}), "0"}),
                         json::array({"0", "-1"})})},
      {"x", json::array({json::array({"0", "0"}), json::array({"1", "0"})})},
  };
  const std::string path = "cli_decompose_input.json";
  {
    std::ofstream f(path);
    f << rep.dump(2) << "\n";
  }
  RunResult r = run("decompose --input " + path + " --family h4n --n 2 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["data"]["decomposition"] == "1*M1");

  // Mismatched metadata is a usage error.
  CHECK(run("decompose --input " + path + " --family h4n --n 3").exit_code == 2);

  // Matrices violating the relations are a reported failure (exit 1).
  json bad = rep;
  bad["x"] = json::array({json::array({"0", "1"}), json::array({"1", "0"})});
  {
    std::ofstream f(path);
    f << bad.dump(2) << "\n";
  }
  CHECK(run("decompose --input " + path + " --family h4n --n 2").exit_code == 1);
  std::remove(path.c_str());
}

TEST_CASE("csv output is RFC 4180 shaped") {
  RunResult r = run("green-table --family h4n --n 1 --format csv");
  CHECK(r.exit_code == 0);
  // Header plus one row per ordered pair of the 4 catalog labels.
  std::istringstream is(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) lines.push_back(line);
  REQUIRE(lines.size() == 17);
  for (const std::string& l : lines) {
    REQUIRE(!l.empty());
    CHECK(l.back() == '\r');
  }
  CHECK(lines[0] == "left,right,product\r");
  // Catalog csv for the same family.
  RunResult cat = run("catalog --family h4n --n 2 --format csv");
  std::istringstream is2(cat.out);
  int count = 0;
  while (std::getline(is2, line)) ++count;
  CHECK(count == 9);

  // Fields containing commas are quoted: the fingerprint column has them.
  CHECK(cat.out.find("\"") != std::string::npos);
}

TEST_CASE("text output carries a summary line and the a = 0 notice") {
  RunResult r = run("verify --family h4n --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("command: verify") != std::string::npos);
  CHECK(r.out.find("summary: pass=") != std::string::npos);
  CHECK(r.out.find(" fail=0 deviation=0") != std::string::npos);

  RunResult rz = run("verify --family h4n --n 2 --a 0 --format json");
  CHECK(rz.exit_code == 0);
  json j = json::parse(rz.out);
  bool notice = false;
  for (const auto& it : j["items"]) {
    if (it["id"] == "a-zero-notice") notice = (it["status"] == "info");
  }
  CHECK(notice);
}

TEST_CASE("output to file matches stdout byte for byte") {
  const std::string path = "cli_output_test.json";
  RunResult direct = run("catalog --family h4n --n 1 --format json");
  RunResult redirected = run("catalog --family h4n --n 1 --format json --output " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("repeated runs and thread counts give identical bytes") {
  const std::string args = "green-table --family wh4n --n 1 --format json";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run(args, "H4N_THREADS=5 ");
  CHECK(c.exit_code == 0);
  CHECK(a.out == c.out);
}

TEST_CASE("global flags may come before or after the subcommand") {
  RunResult before = run("--family wh4n --n 1 --format json verify");
  RunResult after = run("verify --family wh4n --n 1 --format json");
  CHECK(before.exit_code == 0);
  CHECK(before.out == after.out);
}
