// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "tlg/json_io.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tlg");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Run r;
  r.code = tlg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(TLG_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("phi prints the series") {
    const Run r = run({"phi", "-i", data("p3.json"), "--order", "9", "--output", "json"});
    REQUIRE(r.code == 0);
    const tlg::Json j = tlg::Json::parse(r.out);
    CHECK(j["order"] == 9);
    CHECK(j["coeffs"][4] == "24");
    CHECK(j["coeffs"][8] == "2520");
    const Run par = run({"--jobs", "2", "phi", "-i", data("p3.json"), "--order", "9", "--output", "json"});
    CHECK(par.out == r.out);
  }

  TEST_CASE("iseries grass") {
    const Run r = run({"iseries", "grass", "--n", "3", "--k", "3", "--degrees", "2,1,1,1", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,12,756,78960,10451700\n");
  }

  TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "-i", data("p3.json"), "--against", data("p3_series.json")}).code == 0);
    const Run bad = run({"verify", "-i", data("square2.json"), "--against", data("p3_series.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"ParseError\"") != std::string::npos);
  }

  TEST_CASE("polytope subcommands") {
    CHECK(run({"polytope", "reflexive", "-i", data("square2.json")}).out == "false\n");
    CHECK(run({"polytope", "volume", "-i", data("square2.json")}).out == "32\n");
    const Run pts = run({"polytope", "points", "--region", "interior", "-i", data("square2.json"), "--output", "json"});
    CHECK(pts.code == 0);
    CHECK(pts.out.find("[") != std::string::npos);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"phi", "--no-such-flag"}).code == 2);
    CHECK(run({"phi"}).code == 2);
    CHECK(run({"--output", "xml", "phi", "-i", data("p3.json")}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == 0); }

  TEST_CASE("errors are reported as JSON on stdout") {
    const Run r = run({"lattice", "disc", "--name", "Q9", "--output", "json"});
    CHECK(r.code == 1);
    const tlg::Json j = tlg::Json::parse(r.out);
    CHECK(j.contains("error"));
    CHECK(j["error"].contains("code"));
  }

  TEST_CASE("lattice and hodge commands") {
    CHECK(run({"lattice", "sig", "--name", "M"}).code == 0);
    CHECK(run({"hodge", "kmatrix", "--degrees", "4", "--index", "1", "--output", "json"}).out.find("4") !=
          std::string::npos);
    const Run s = run({"hodge", "surface", "--d", "3", "--output", "json"});
    CHECK(s.code == 0);
    CHECK(tlg::Json::parse(s.out).dump().find("7") != std::string::npos);
  }

  TEST_CASE("catalog commands label anchors") {
    const Run r = run({"catalog", "verify", "--id", "1-6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("regression") != std::string::npos);
    const Run p = run({"catalog", "verify", "--id", "1-17"});
    CHECK(p.out.find("paper-anchored") != std::string::npos);
    CHECK(run({"catalog", "list"}).out.find("G36-1121") != std::string::npos);
    CHECK(run({"catalog", "verify", "--id", "no-such-id"}).code != 0);
  }
}
