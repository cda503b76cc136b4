// Copyright 2026 The kfold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the installed `kfold` binary end to end through a shell.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "test_util.hpp"

using kfold_test::run_cli;
using nlohmann::json;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::string temp_path(const std::string& name) {
  return "/tmp/kfold_cli_test_" + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("chik prints the bare number") {
  auto result = run_cli("chik --family antiweb -n 10 -p 3 -k 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "7\n");

  result = run_cli("--json chik --family antiweb -n 10 -p 3 -k 2");
  CHECK(result.exit_code == 0);
  json j = json::parse(result.output);
  CHECK(j["chi_k"] == 7);
  CHECK(j["family"] == "antiweb");

  // --json may come after the subcommand too
  result = run_cli("chik --family antiweb -n 10 -p 3 -k 2 --json");
  CHECK(result.exit_code == 0);
  CHECK(json::parse(result.output)["chi_k"] == 7);
}

TEST_CASE("color then verify round trip") {
  auto colored = run_cli("--json color --family antiweb -n 10 -p 3 -k 2");
  REQUIRE(colored.exit_code == 0);
  json doc = json::parse(colored.output);
  REQUIRE(doc["x"] == 7);
  REQUIRE(doc["classes"].size() == 7);
  CHECK(doc["classes"][0] == json::array({0, 4, 7}));

  std::string path = temp_path("coloring.json");
  {
    std::ofstream out(path);
    out << colored.output;
  }
  auto verified = run_cli("verify --input " + path);
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.find("valid") == 0);

  auto verified_json = run_cli("--json verify --input " + path);
  CHECK(verified_json.exit_code == 0);
  CHECK(json::parse(verified_json.output)["valid"] == true);

  // Checking the same document as a 3-fold coloring must fail.
  auto overfold = run_cli("verify --input " + path + " -k 3");
  CHECK(overfold.exit_code == 1);
  CHECK(overfold.output.find("INVALID") == 0);
  std::remove(path.c_str());
}

TEST_CASE("human-readable color output lists one class per line") {
  auto result = run_cli("color --family web -n 5 -p 2 -k 1");
  CHECK(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1] == "color 1: 0 1");
  CHECK(lines[2] == "color 2: 2 3");
  CHECK(lines[3] == "color 3: 0 4");
}

TEST_CASE("minusv and critical") {
  auto result = run_cli("minusv --family web -n 5 -p 2 -k 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "6\n");

  result = run_cli("critical --family web -n 6 -p 2 -k 4");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("not critical (gcd(n,p)") == 0);

  result = run_cli("critical --family web -n 5 -p 2 -k 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("critical (") == 0);

  result = run_cli("--json critical --family antiweb -n 17 -p 3 -k 4");
  CHECK(result.exit_code == 0);
  json j = json::parse(result.output);
  CHECK(j["critical"] == true);
  CHECK(j["chi_k"] == 14);
  CHECK(j["chi_k_minus_v"] == 13);
}

TEST_CASE("bounds output") {
  auto result = run_cli("--json bounds --family web -n 6 -p 2 -k 5");
  CHECK(result.exit_code == 0);
  json j = json::parse(result.output);
  CHECK(j["k_omega"] == 15);
  CHECK(j["chi_k"] == 15);
  CHECK(j["k_chi"] == 15);
  CHECK(j["tight"]["omega"] == true);
}

TEST_CASE("oracle answers from params and from DIMACS files") {
  auto result = run_cli("oracle --family web -n 5 -p 2 -k 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "5\n");

  result = run_cli("oracle --family web -n 5 -p 2 -k 2 --via-lex");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "5\n");

  std::string path = temp_path("c5.col");
  {
    std::ofstream out(path);
    out << "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";
  }
  result = run_cli("oracle --input " + path + " -k 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "3\n");
  std::remove(path.c_str());

  result = run_cli("oracle -k 1");
  CHECK(result.exit_code == 2);
}

TEST_CASE("export emits exact DIMACS") {
  auto result = run_cli("export --family web -n 5 -p 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "p edge 5 5\ne 1 3\ne 1 4\ne 2 4\ne 2 5\ne 3 5\n");

  result = run_cli("export --family antiweb -n 6 -p 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "p edge 6 0\n");

  std::string path = temp_path("out.col");
  result = run_cli("export --family web -n 8 -p 3 -o " + path);
  CHECK(result.exit_code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "p edge 8 12");
  std::remove(path.c_str());
}

TEST_CASE("table rows agree with the critical subcommand") {
  auto result = run_cli("table --family antiweb --n-max 12 --k 1");
  REQUIRE(result.exit_code == 0);
  auto lines = split_lines(result.output);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] ==
        "family,n,p,k,alpha,omega,chi_k,chi_k_minus_v,critical,"
        "chistar_critical,tight_omega,tight_chi,tight_frac");
  bool saw_7_3 = false;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    std::istringstream fields(lines[row]);
    std::string family, cell;
    std::getline(fields, family, ',');
    REQUIRE(family == "antiweb");
    std::vector<std::string> rest;
    while (std::getline(fields, cell, ',')) {
      rest.push_back(cell);
    }
    REQUIRE(rest.size() == 12);
    const std::string& n = rest[0];
    const std::string& p = rest[1];
    const std::string& critical = rest[7];
    const std::string& chistar = rest[8];
    auto check = run_cli("--json critical --family antiweb -n " + n +
                         " -p " + p + " -k 1");
    REQUIRE(check.exit_code == 0);
    bool expect = json::parse(check.output)["critical"].get<bool>();
    REQUIRE(critical == (expect ? "1" : "0"));
    if (n == "7" && p == "3") {
      saw_7_3 = true;
      CHECK(chistar == "1");
    }
  }
  CHECK(saw_7_3);
}

TEST_CASE("validation failures exit 2, oversized oracle runs exit 3") {
  auto result = run_cli("chik --family web -n 5 -p 3 -k 1");
  CHECK(result.exit_code == 2);

  result = run_cli("chik --family web -n 5 -p 2 -k 0");
  CHECK(result.exit_code == 2);

  result = run_cli("oracle --family web -n 24 -p 2 -k 1");
  CHECK(result.exit_code == 3);

  result = run_cli("verify --input /nonexistent/path.json");
  CHECK(result.exit_code == 2);

  result = run_cli("nonsense");
  CHECK(result.exit_code == 2);
}

TEST_SUITE_END();
