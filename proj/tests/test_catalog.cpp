// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "support.hpp"
#include "tlg/catalog.hpp"
#include "tlg/error.hpp"
#include "tlg/json_io.hpp"

using namespace tlg;
using namespace tlg::test;

namespace {

std::string parse_error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == "ParseError") return e.what();
    return "wrong code " + e.code();
  }
  return "no error";
}

CatalogEntry p3_entry(const std::string& id) {
  CatalogEntry e;
  e.id = id;
  e.description = "Projective space";
  e.laurent = p3_model();
  e.generator.kind = GeneratorKind::Wci;
  e.generator.wci = WciSpec{{1, 1, 1, 1}, {}};
  e.degree = 64;
  e.index = 4;
  e.rho = 1;
  return e;
}

CatalogEntry regression_entry(const std::string& id, PowerSeries prefix) {
  CatalogEntry e;
  e.id = id;
  e.description = "V12 model";
  e.laurent = v12_model();
  e.expected_series_prefix = SeriesPrefix{std::move(prefix), "derived-regression"};
  return e;
}

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("Laurent polynomials round trip") {
    const LaurentPoly f = v12_model() + mono(xyz(), {2, -1, 0}, -7);
    CHECK(laurent_from_json(laurent_to_json(f)) == f);
    const Json j = Json::parse(R"({"vars":["x"],"terms":[{"e":[1],"c":"1/2"},{"e":[1],"c":"1/2"},{"e":[0],"c":3}]})");
    CHECK(laurent_from_json(j) == var({"x"}, "x") + cst({"x"}, 3));
  }

  TEST_CASE("malformed documents name the location") {
    const Json bad_c = Json::parse(R"({"vars":["x"],"terms":[{"e":[1],"c":"1"},{"e":[2],"c":"1/0"}]})");
    CHECK(parse_error_message([&] { laurent_from_json(bad_c); }).find("$.terms[1].c") != std::string::npos);
    const Json bad_e = Json::parse(R"({"vars":["x","y"],"terms":[{"e":[1],"c":"1"}]})");
    CHECK(parse_error_message([&] { laurent_from_json(bad_e); }).find("$.terms[0].e") != std::string::npos);
    const Json bad_order = Json::parse(R"({"order":3,"coeffs":["1","2"]})");
    CHECK(parse_error_message([&] { series_from_json(bad_order); }).find("$") != std::string::npos);
    const Json asym = Json::parse(R"({"gram":[[2,1],[0,2]]})");
    CHECK(parse_error_message([&] { gram_from_json(asym); }) != "no error");
  }

  TEST_CASE("series, polytopes and operators round trip") {
    const PowerSeries s = series_of({1, 12, 756, 78960, 10451700});
    CHECK(series_from_json(series_to_json(s)) == s);
    CHECK(dump(series_to_json(s)).find("\"10451700\"") != std::string::npos);
    const LatticePolytope p = newton_polytope(v12_model());
    CHECK(equals(polytope_from_json(polytope_to_json(p)), p));
    DifferentialOperator op;
    op.add(0, 2, Q(1));
    op.add(2, 1, Q(-3, 2));
    CHECK(operator_from_json(operator_to_json(op)) == op);
  }

  TEST_CASE("file syntax errors report the byte offset") {
    const auto path = temp_file("tlg_bad.json");
    {
      std::ofstream(path) << "{\"vars\": [\"x\",]}";
    }
    const std::string msg = parse_error_message([&] { read_json_file(path.string()); });
    CHECK(msg.find(path.string()) != std::string::npos);
    CHECK(msg.find("byte") != std::string::npos);
    std::filesystem::remove(path);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("entries round trip through JSON") {
    std::vector<CatalogEntry> entries{p3_entry("a-1"), regression_entry("a-2", phi(v12_model(), 5))};
    entries[1].polytope_notes = std::vector<IVec>{{1, 0, 0}};
    const auto path = temp_file("tlg_catalog.json");
    save_catalog(entries, path.string());
    const auto back = load_catalog(path.string());
    REQUIRE(back.size() == 2);
    CHECK(entry_to_json(back[0]) == entry_to_json(entries[0]));
    CHECK(entry_to_json(back[1]) == entry_to_json(entries[1]));
    CHECK(back[0].anchor() == "paper");
    CHECK(back[1].anchor() == "regression");
    std::filesystem::remove(path);
  }

  TEST_CASE("an empty catalog verifies vacuously") {
    const auto entries = catalog_from_json(Json::array());
    CHECK(entries.empty());
    const CatalogSummary s = verify_all(entries, 4);
    CHECK(s.all_pass());
    CHECK(s.entries.empty());
  }

  TEST_CASE("malformed catalogs are parse errors") {
    Json j = Json::array({entry_to_json(p3_entry("dup")), entry_to_json(p3_entry("dup"))});
    CHECK(parse_error_message([&] { catalog_from_json(j); }) != "no error");
    Json k = Json::array({entry_to_json(p3_entry("x-1"))});
    k[0]["laurent"]["terms"][0]["c"] = "1/0";
    CHECK(parse_error_message([&] { catalog_from_json(k); }).find("$[0].laurent.terms[0].c") != std::string::npos);
    CHECK(parse_error_message([&] { catalog_from_json(Json::object()); }) != "no error");
  }

  TEST_CASE("a corrupted entry fails alone") {
    PowerSeries wrong = phi(v12_model(), 6);
    wrong.coeffs[4] += 1;
    const std::vector<CatalogEntry> entries{p3_entry("c-10"), regression_entry("c-2", wrong), p3_entry("c-1")};
    const CatalogSummary s = verify_all(entries, 6);
    CHECK(s.passed == 2);
    CHECK(s.failed == 1);
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].id == "c-1");
    CHECK(s.entries[1].id == "c-2");
    CHECK(s.entries[2].id == "c-10");
    CHECK_FALSE(s.entries[1].pass());
    CHECK(s.entries[1].period.first_mismatch == 4u);
  }

  TEST_CASE("wrong stored degree and polytope notes are reported") {
    CatalogEntry e = p3_entry("d-1");
    e.degree = 63;
    e.polytope_notes = std::vector<IVec>{{1, 0, 0}};
    const EntryReport r = verify_entry(e, 4);
    CHECK(r.period.match);
    CHECK(r.computed_degree == Z(64));
    CHECK(r.polytope_notes_ok == false);
    CHECK(r.failures.size() == 2);
  }

  TEST_CASE("natural order") {
    CHECK(natural_less("1-2", "1-10"));
    CHECK_FALSE(natural_less("1-10", "1-2"));
    CHECK(natural_less("1-17", "2-1"));
    CHECK(natural_less("9-1", "10-1"));
    CHECK(natural_less("G36-1112", "G36-1121"));
    CHECK_FALSE(natural_less("a", "a"));
  }

  TEST_CASE("bundled catalog passes and does not depend on the job count") {
    const auto entries = load_catalog(default_catalog_path());
    CHECK(entries.size() == 26);
    const CatalogSummary one = verify_all(entries, 4, 1);
    const CatalogSummary four = verify_all(entries, 4, 4);
    CHECK(one.all_pass());
    CHECK(dump(summary_to_json(one)) == dump(summary_to_json(four)));
  }

  TEST_CASE("TLG_CATALOG overrides the default path") {
    const char* old = std::getenv("TLG_CATALOG");
    const bool had = old != nullptr;
    const std::string saved = had ? old : "";
    setenv("TLG_CATALOG", "/tmp/elsewhere.json", 1);
    CHECK(default_catalog_path() == "/tmp/elsewhere.json");
    if (had) {
      setenv("TLG_CATALOG", saved.c_str(), 1);
    } else {
      unsetenv("TLG_CATALOG");
    }
    CHECK(default_catalog_path() == (had ? saved : std::string(TLG_DEFAULT_CATALOG)));
  }
}
