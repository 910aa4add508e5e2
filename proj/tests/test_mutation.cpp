// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "tlg/error.hpp"
#include "tlg/mutation.hpp"
#include "tlg/polytope.hpp"

using namespace tlg;
using namespace tlg::test;

namespace {

const std::vector<std::string> kXY{"x", "y"};

}  // namespace

TEST_SUITE("mutation") {
  TEST_CASE("elementary mutation and its inverse") {
    const LaurentPoly x = var(kXY, "x"), y = var(kXY, "y"), one = cst(kXY, 1);
    const LaurentPoly f = y * (one + x) + mono(kXY, {0, -1});
    const LaurentPoly g = elementary_mutation(f, "y", one + x);
    CHECK(g == y + (one + x) * mono(kXY, {0, -1}));
    CHECK(elementary_mutation(g, "y", one + x, MutationRule{1, {}}) == f);
    CHECK(phi(f, 9) == phi(g, 9));
  }

  TEST_CASE("mutations preserve the period in three variables") {
    const auto& v = xyz();
    const LaurentPoly x = var(v, "x"), y = var(v, "y"), z = var(v, "z"), one = cst(v, 1);
    const LaurentPoly f = z * pow(one + x + y, 2) + mono(v, {0, 0, -1}) + x + y;
    const LaurentPoly g = elementary_mutation(f, "z", pow(one + x + y, 2));
    CHECK(g == z + pow(one + x + y, 2) * mono(v, {0, 0, -1}) + x + y);
    CHECK(phi(f, 8) == phi(g, 8));
  }

  TEST_CASE("slice powers override the default exponent") {
    const LaurentPoly x = var(kXY, "x"), y = var(kXY, "y"), one = cst(kXY, 1);
    const LaurentPoly f = y + mono(kXY, {0, -1});
    MutationRule rule;
    rule.slice_powers[-1] = 2;
    rule.slice_powers[1] = 0;
    CHECK(elementary_mutation(f, "y", one + x, rule) == y + pow(one + x, 2) * mono(kXY, {0, -1}));
  }

  TEST_CASE("errors") {
    const LaurentPoly x = var(kXY, "x"), y = var(kXY, "y"), one = cst(kXY, 1);
    CHECK_THROWS_AS(elementary_mutation(y + mono(kXY, {0, -1}), "y", one + y), Error);
    try {
      elementary_mutation(y + x, "y", one + x);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == "NotLaurent");
    }
  }

  TEST_CASE("polytope mutation matches the Newton polytope of the mutated polynomial") {
    const auto& v = xyz();
    const LaurentPoly x = var(v, "x"), y = var(v, "y"), z = var(v, "z"), one = cst(v, 1);
    const LaurentPoly f = z * pow(one + x + y, 2) + mono(v, {0, 0, -1}) + x + y;
    const LaurentPoly factor = pow(one + x + y, 2);
    const LaurentPoly g = elementary_mutation(f, "z", factor);
    const PolytopeMutation data = mutation_data_for(f, "z", factor);
    CHECK(equals(polytope_mutation_effect(newton_polytope(f), data), newton_polytope(g)));
  }
}
