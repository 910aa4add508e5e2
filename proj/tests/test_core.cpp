// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "tlg/error.hpp"
#include "tlg/kernels.hpp"
#include "tlg/laurent.hpp"
#include "tlg/rational.hpp"
#include "tlg/series.hpp"

using namespace tlg;
using namespace tlg::test;

TEST_SUITE("rational") {
  TEST_CASE("parse and print canonical forms") {
    CHECK(parse_rational("3/2") == Q(3, 2));
    CHECK(parse_rational("-6/4") == Q(-3, 2));
    CHECK(parse_rational("+7") == Q(7));
    CHECK(to_string(parse_rational("-10/1")) == "-10");
    CHECK(to_string(parse_rational("4/6")) == "2/3");
  }

  TEST_CASE("malformed rationals are parse errors") {
    for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "2/3x", "1/-2"}) {
      CAPTURE(bad);
      try {
        parse_rational(bad);
        FAIL("no error");
      } catch (const Error& e) {
        CHECK(e.code() == "ParseError");
      }
    }
  }

  TEST_CASE("factorial table") {
    FactorialTable t;
    CHECK(t.factorial(0) == 1);
    CHECK(t.factorial(10) == 3628800);
    CHECK(t.factorial(25) == Z("15511210043330985984000000", 10));
  }
}

TEST_SUITE("laurent") {
  TEST_CASE("arithmetic cancels and keeps exponent order") {
    const auto& v = xyz();
    const auto x = var(v, "x"), y = var(v, "y");
    const LaurentPoly d = (x + y) * (x - y);
    CHECK(d.size() == 2);
    CHECK(d.coeff({2, 0, 0}) == 1);
    CHECK(d.coeff({0, 2, 0}) == -1);
    CHECK(d.coeff({1, 1, 0}) == 0);
    CHECK((x - x).is_zero());
  }

  TEST_CASE("powers agree with repeated multiplication") {
    const LaurentPoly f = p3_model();
    LaurentPoly r = cst(xyz(), 1);
    for (int i = 0; i < 5; ++i) r = r * f;
    CHECK(pow(f, 5) == r);
    CHECK(pow(f, 0) == cst(xyz(), 1));
  }

  TEST_CASE("mismatched variable lists are rejected") {
    const LaurentPoly a = LaurentPoly::variable({"x", "y"}, "x");
    const LaurentPoly b = LaurentPoly::variable({"y", "x"}, "x");
    CHECK_THROWS_AS(a + b, Error);
  }

  TEST_CASE("constant term over a subset of variables") {
    const auto& v = xyz();
    const LaurentPoly f = var(v, "x") * var(v, "z") + mono(v, {-1, 0, 2}) + mono(v, {0, 1, 0}, 3);
    const LaurentPoly c = constant_term(f, {"x"});
    CHECK(c.vars() == std::vector<std::string>{"y", "z"});
    CHECK(c.coeff({1, 0}) == 3);
    CHECK(c.size() == 1);
  }

  TEST_CASE("substitution, exact division and NotLaurent") {
    const std::vector<std::string> v{"x", "y"};
    const LaurentPoly x = var(v, "x"), y = var(v, "y"), one = cst(v, 1);
    Substitution s;
    s["y"] = RationalExpr(y * (one + x));
    const LaurentPoly f = y + mono(v, {0, -1});
    const RationalExpr r = substitute(f, s);
    CHECK((r.equals(RationalExpr(y * y * pow(one + x, 2) + one, y * (one + x)))));
    CHECK_THROWS_AS(as_laurent(r), Error);
    LaurentPoly q;
    CHECK(laurent_divide(pow(one + x, 3) * y, one + x, &q));
    CHECK(q == pow(one + x, 2) * y);
    CHECK_FALSE(laurent_divide(one + x + y, one + x, &q));
  }

  TEST_CASE("printing") {
    const std::vector<std::string> v{"x", "y"};
    const LaurentPoly f = var(v, "x") + mono(v, {-1, -1}, 3);
    CHECK(f.to_string().find("x") != std::string::npos);
    CHECK(LaurentPoly(v).to_string() == "0");
  }
}

TEST_SUITE("series") {
  TEST_CASE("phi of the P3 model") {
    const PowerSeries s = phi(p3_model(), 13);
    CHECK(s.coeffs[4] == 24);
    CHECK(s.coeffs[8] == 2520);
    CHECK(s.coeffs[12] == 369600);
    CHECK(s.coeffs[1] == 0);
    CHECK(s == iseries_wci(WciSpec{{1, 1, 1, 1}, {}}, 13));
  }

  TEST_CASE("phi over a subset keeps the parameter out") {
    const std::vector<std::string> v{"x", "q"};
    const LaurentPoly f = var(v, "x") + mono(v, {-1, 1});
    const auto rows = phi_with_parameters(f, 5, {"x"});
    CHECK(rows[2].coeff({1}) == 2);
    CHECK(rows[4].coeff({2}) == 6);
    CHECK_THROWS_AS(phi(f, 5, {"x"}), Error);
  }

  TEST_CASE("wci I-series spot values") {
    CHECK(iseries_wci(WciSpec{{1, 1, 1, 1, 3}, {6}}, 3).coeffs[1] == 120);
    CHECK(iseries_wci(WciSpec{{1, 1, 1, 1, 1}, {4}}, 2).coeffs[1] == 24);
    CHECK(iseries_wci(WciSpec{{1, 1, 1}, {}}, 7).coeffs[6] == 90);
    CHECK_THROWS_AS(iseries_wci(WciSpec{{1, 1}, {3}}, 3), Error);
  }

  TEST_CASE("grassmannian I-series") {
    const PowerSeries s = iseries_grassmannian(GrassSpec{3, 3, {2, 1, 1, 1}}, 5);
    CHECK(s == series_of({1, 12, 756, 78960, 10451700}));
    CHECK(iseries_grassmannian(GrassSpec{2, 3, {1, 1, 1}}, 9) == phi(g25_model(), 9));
    CHECK(iseries_grassmannian(GrassSpec{1, 3, {}}, 9) == iseries_wci(WciSpec{{1, 1, 1, 1}, {}}, 9));
    CHECK(iseries_grassmannian(GrassSpec{3, 3, {2, 1, 1, 1}}, 1) == series_of({1}));
  }

  TEST_CASE("toric I-series") {
    ToricCurveData s7{{{1, 0, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 1, 0, 0, 1}}, {2, 3, 2}, {}, {}, {}};
    const ToricISeries t = iseries_toric(s7, 6);
    CHECK(t.series.coeffs[2] == 4);
    CHECK(t.series.coeffs[0] == 1);
    ToricCurveData p2{{{1, 1, 1}}, {3}, {}, {}, {}};
    CHECK(iseries_toric(p2, 10).series == iseries_wci(WciSpec{{1, 1, 1}, {}}, 10));
    CHECK(iseries_toric(p2, 1).series == series_of({1}));
    ToricCurveData bad{{{1, -1}}, {0}, {}, {}, {}};
    CHECK_THROWS_AS(iseries_toric(bad, 3), Error);
  }

  TEST_CASE("verify and compare report the first mismatch") {
    const PeriodReport ok = verify_period(p3_model(), iseries_wci(WciSpec{{1, 1, 1, 1}, {}}, 13));
    CHECK(ok.match);
    CHECK(ok.compared == 13);
    const PeriodReport bad = compare_series(series_of({1, 0, 2, 5}), series_of({1, 0, 2, 6}));
    CHECK_FALSE(bad.match);
    CHECK(*bad.first_mismatch == 3);
    CHECK(bad.got == 5);
    CHECK(bad.expected == 6);
  }

  TEST_CASE("every backend and pruning setting gives the same series") {
    const LaurentPoly f = v12_model();
    const PowerSeries ref = phi(f, 7, {}, KernelOptions{KernelBackend::Reference, false, 0});
    for (auto b : {KernelBackend::Reference, KernelBackend::Serial, KernelBackend::OpenMP}) {
      for (bool prune : {false, true}) {
        CHECK(phi(f, 7, {}, KernelOptions{b, prune, 2}) == ref);
      }
    }
  }
}
