// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "properties.hpp"

using namespace tlg::test;

// Smaller runs of the acceptance property suites.
TEST_SUITE("properties") {
  TEST_CASE("GL(n,Z) period invariance") {
    const PropertyResult r = check_gl_invariance(11, 10, 10, 5);
    INFO(r.first_failure);
    CHECK(r.ok());
  }

  TEST_CASE("Newton polytope of a product is the Minkowski sum") {
    const PropertyResult r = check_newton_minkowski(12, 50);
    INFO(r.first_failure);
    CHECK(r.ok());
  }

  TEST_CASE("pruned and unpruned powering agree") {
    const PropertyResult r = check_pruning(13, 12, 6);
    INFO(r.first_failure);
    CHECK(r.ok());
  }

  TEST_CASE("Smith normal form identities") {
    const PropertyResult r = check_smith(14, 60);
    INFO(r.first_failure);
    CHECK(r.ok());
  }

  TEST_CASE("sublattice index") {
    const PropertyResult r = check_sublattice_index(15, 10);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
}
