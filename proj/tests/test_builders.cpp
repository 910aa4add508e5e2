// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "tlg/builders.hpp"
#include "tlg/error.hpp"
#include "tlg/polytope.hpp"

using namespace tlg;
using namespace tlg::test;

namespace {

// Number of ways to pick a subset of `w` with the given sum.
int subset_sum_count(const std::vector<int>& w, int target) {
  int count = 0;
  for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
    int s = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (mask & (1u << i)) s += w[i];
    }
    if (s == target) ++count;
  }
  return count;
}

LaurentPoly params_one(const DelPezzoScript& s, CoefficientMode mode) {
  return set_parameters_to_one(del_pezzo_model(s, mode), del_pezzo_params(s));
}

}  // namespace

TEST_SUITE("builders") {
  TEST_CASE("nef partitions") {
    const auto p = find_nef_partitions(WciSpec{{1, 1, 1, 2, 3}, {6}}, NefQuality::VeryGood);
    REQUIRE_FALSE(p.empty());
    for (const auto& part : p) {
      CHECK(classify_partition(WciSpec{{1, 1, 1, 2, 3}, {6}}, part) == NefQuality::VeryGood);
    }
    const auto trivial = find_nef_partitions(WciSpec{{1, 1, 1, 1}, {}}, NefQuality::Plain);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].groups == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(find_nef_partitions(WciSpec{{1, 6, 10, 15}, {30}}, NefQuality::Plain).size() ==
          static_cast<size_t>(subset_sum_count({1, 6, 10, 15}, 30)));
  }

  TEST_CASE("good but not very good partitions are classified") {
    const WciSpec spec{{1, 1, 2, 2}, {4}};
    CHECK(classify_partition(spec, NefPartition{{{0, 1}, {2, 3}}, NefQuality::Plain}) == NefQuality::VeryGood);
    CHECK(classify_partition(spec, NefPartition{{{3}, {0, 1, 2}}, NefQuality::Plain}) == NefQuality::Plain);
    const WciSpec mixed{{1, 1, 1, 2, 2}, {4}};
    CHECK(classify_partition(mixed, NefPartition{{{2, 4}, {0, 1, 3}}, NefQuality::Plain}) == NefQuality::Good);
    CHECK_THROWS_AS(classify_partition(spec, NefPartition{{{0}, {1, 2, 3}}, NefQuality::Plain}), Error);
  }

  TEST_CASE("wci models reproduce the printed closed forms") {
    const auto& v = xyz();
    const auto x = var(v, "x"), y = var(v, "y"), z = var(v, "z"), one = cst(v, 1);
    CHECK(wci_laurent(WciSpec{{1, 1, 1, 1, 3}, {6}}) == pow(x + y + z + one, 6) * mono(v, {-1, -1, -1}));
    CHECK(wci_laurent(WciSpec{{1, 1, 1, 1, 1}, {4}}) == pow(x + y + z + one, 4) * mono(v, {-1, -1, -1}));
    CHECK(wci_laurent(WciSpec{{1, 1, 1, 2, 3}, {6}}) == pow(x + y + one, 6) * mono(v, {-1, -2, -1}) + z);
    CHECK(wci_laurent(WciSpec{{1, 1, 1, 1, 1, 1}, {2, 2}}) ==
          pow(x + one, 2) * pow(y + one, 2) * mono(v, {-1, -1, -1}) + z);
    CHECK(wci_laurent(WciSpec{{1, 1, 1, 1}, {}}) == p3_model());
  }

  TEST_CASE("phi of wci models equals the I-series") {
    for (const WciSpec& s : {WciSpec{{1, 1, 1, 1, 3}, {6}}, WciSpec{{1, 1, 1, 1, 1}, {4}}, WciSpec{{1, 1, 1, 2, 3}, {6}},
                             WciSpec{{1, 1, 1, 1, 1, 1}, {2, 2}}, WciSpec{{1, 1, 1, 1, 1}, {3}}}) {
      CHECK(phi(wci_laurent(s), 8) == iseries_wci(s, 8));
    }
  }

  TEST_CASE("binomial principle") {
    const LatticePolytope tri = LatticePolytope::hull(2, {{1, 0}, {0, 1}, {-1, -1}});
    const std::vector<std::string> v{"x", "y"};
    CHECK(binomial_principle(tri) == var(v, "x") + var(v, "y") + mono(v, {-1, -1}));
    const LatticePolytope sq = LatticePolytope::hull(2, {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}});
    const LaurentPoly f = binomial_principle(sq);
    CHECK(f.coeff({1, 1}) == 1);
    CHECK(f.coeff({0, -1}) == 2);
    CHECK(f.coeff({0, 0}) == 0);
    CHECK(f == pow(var(v, "x") + cst(v, 1), 2) * pow(var(v, "y") + cst(v, 1), 2) * mono(v, {-1, -1}) -
                   cst(v, 4));
    CHECK(polytope_edges(sq).size() == 4);
    // The square facet of the 1-14 polytope has an interior lattice point.
    const LaurentPoly f14 = wci_laurent(WciSpec{{1, 1, 1, 1, 1, 1}, {2, 2}});
    CHECK_THROWS_AS(binomial_principle(newton_polytope(f14)), Error);
  }

  TEST_CASE("A_n polygons") {
    // Segments enter decompositions as unit summands only.
    CHECK(is_An_polygon(LatticePolytope::hull(2, {{0, 0}, {1, 0}})) == 0);
    CHECK_FALSE(is_An_polygon(LatticePolytope::hull(2, {{0, 0}, {3, 0}})).has_value());
    CHECK(is_An_polygon(LatticePolytope::hull(2, {{0, 0}, {2, 0}, {0, 1}})) == 2);
    CHECK_FALSE(is_An_polygon(LatticePolytope::hull(2, {{0, 0}, {2, 0}, {0, 2}})).has_value());
    const std::vector<std::string> v{"x", "y"};
    CHECK(an_polynomial(LatticePolytope::hull(2, {{0, 0}, {1, 0}})) == var(v, "x") + cst(v, 1));
    CHECK(an_polynomial(LatticePolytope::hull(2, {{0, 0}, {2, 0}, {0, 1}})) ==
          pow(var(v, "x") + cst(v, 1), 2) + var(v, "y"));
  }

  TEST_CASE("Minkowski certificates round trip") {
    for (const LaurentPoly& f : {p3_model(), v12_model(), g25_model(),
                                 wci_laurent(WciSpec{{1, 1, 1, 1, 1, 1}, {2, 2}})}) {
      const MinkowskiResult r = check_minkowski(f);
      REQUIRE(r.certificate.has_value());
      // Minkowski polynomials have constant term 0.
      const LaurentPoly g = minkowski_polynomial(newton_polytope(f), *r.certificate);
      CHECK(g == f - LaurentPoly::constant(f.vars(), f.constant_coeff()));
      const MinkowskiResult again = check_minkowski(g);
      REQUIRE(again.certificate.has_value());
      CHECK(again.certificate->facets.size() == r.certificate->facets.size());
    }
  }

  TEST_CASE("a non-Minkowski coefficient pattern has no certificate") {
    const auto& v = xyz();
    const LaurentPoly f = p3_model() + var(v, "x") * cst(v, 2);
    const MinkowskiResult r = check_minkowski(f);
    CHECK_FALSE(r.certificate.has_value());
    CHECK_FALSE(r.detail.empty());
  }

  TEST_CASE("del Pezzo scripts give reflexive polygons satisfying the 12 rule") {
    const std::vector<DelPezzoScript> scripts{
        {DelPezzoBase::P2, {}, {}},
        {DelPezzoBase::Quadric, {}, {}},
        {DelPezzoBase::P2, {{0, -1}}, {}},
        {DelPezzoBase::P2, {{0, -1}, {1, 1}}, {}},
        {DelPezzoBase::P2, {{0, -1}, {1, 1}, {-1, 0}}, {}},
    };
    for (const auto& s : scripts) {
      for (auto mode : {CoefficientMode::Toric, CoefficientMode::Surface}) {
        const LatticePolytope n = newton_polytope(params_one(s, mode));
        REQUIRE(is_reflexive(n));
        const LatticePolytope d = dual(n).to_lattice();
        CHECK(lattice_points(n, PointRegion::Boundary).size() + lattice_points(d, PointRegion::Boundary).size() == 12);
      }
    }
  }

  TEST_CASE("del Pezzo periods match toric I-series") {
    const DelPezzoScript p2{DelPezzoBase::P2, {}, {}};
    CHECK(phi(params_one(p2, CoefficientMode::Toric), 8) == iseries_toric(ToricCurveData{{{1, 1, 1}}, {3}, {}, {}, {}}, 8).series);
    const DelPezzoScript quadric{DelPezzoBase::Quadric, {}, {}};
    CHECK(phi(params_one(quadric, CoefficientMode::Toric), 8) ==
          iseries_toric(ToricCurveData{{{1, 1, 0, 0}, {0, 0, 1, 1}}, {2, 2}, {}, {}, {}}, 8).series);
    const DelPezzoScript s7{DelPezzoBase::P2, {{0, -1}, {1, 1}}, {}};
    const ToricCurveData s7_data{{{1, 0, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 1, 0, 0, 1}}, {2, 3, 2}, {}, {}, {}};
    CHECK(phi(params_one(s7, CoefficientMode::Toric), 8) == iseries_toric(s7_data, 8).series);
  }

  TEST_CASE("del Pezzo script errors") {
    CHECK_THROWS_AS(del_pezzo_model(DelPezzoScript{DelPezzoBase::P2, {{0, 0}}, {}}, CoefficientMode::Toric), Error);
    CHECK_THROWS_AS(del_pezzo_model(DelPezzoScript{DelPezzoBase::Quadric, {{1, 1}}, {}}, CoefficientMode::Toric), Error);
  }
}
