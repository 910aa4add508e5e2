// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "support.hpp"
#include "tlg/error.hpp"
#include "tlg/grassmann.hpp"

using namespace tlg;
using namespace tlg::test;

TEST_SUITE("grassmann") {
  TEST_CASE("consecutive blocks for G(3,6) with degrees 1,1,2,1") {
    const QuiverModel q = consecutive_blocks(GrassSpec{3, 3, {1, 1, 2, 1}});
    REQUIRE(q.blocks.size() == 4);
    CHECK(q.block_name(0) == "HB(0,1)");
    CHECK(q.block_name(1) == "HB(1,2)");
    CHECK(q.block_name(2) == "MB(2,2)");
    CHECK(q.block_name(3) == "VB(2,3)");
    CHECK(q.blocks[2].degree == 2);
    const auto wv = weight_vertices(q);
    CHECK(wv[2] == QuiverVertex{3, 1});
    CHECK(q.b0.size() == 1);
  }

  TEST_CASE("degrees 1,1,1,2 end with a vertical block of size 2") {
    const QuiverModel q = consecutive_blocks(GrassSpec{3, 3, {1, 1, 1, 2}});
    CHECK(q.blocks.back().kind == BlockKind::Vertical);
    CHECK(q.blocks.back().degree == 2);
    CHECK(q.blocks.back().s - q.blocks.back().r == 2);
  }

  TEST_CASE("arrow bookkeeping: degrees summing to n+k-1 leave only h_{k,n}") {
    const QuiverModel q = consecutive_blocks(GrassSpec{2, 3, {1, 1, 1, 1}});
    // Vertical arrows 1 + k*n - n, horizontal arrows k*(n-1) + 1.
    CHECK(q.arrows.size() == static_cast<size_t>((1 + 2 * 3 - 3) + (2 * 2 + 1)));
    REQUIRE(q.b0.size() == 1);
    const QuiverArrow& h = q.arrows[q.b0[0]];
    CHECK(h.kind == 'h');
    CHECK(h.i == 2);
    CHECK(h.j == 3);
  }

  TEST_CASE("weight tables satisfy the defining properties") {
    for (const GrassSpec& s : {GrassSpec{3, 3, {1, 1, 2, 1}}, GrassSpec{3, 3, {2, 1, 1, 1}}, GrassSpec{2, 3, {1, 1, 1}},
                               GrassSpec{2, 4, {1, 1, 1, 1, 1}}, GrassSpec{2, 3, {2, 1, 1}}}) {
      const QuiverModel q = consecutive_blocks(s);
      const WeightTable w = weight_table(q);
      const size_t kn = q.vertex_index(s.k, s.n);
      const size_t a0 = q.vertex_index(0, 1), a1 = q.vertex_index(s.k, s.n + 1);
      for (size_t p = 0; p < q.blocks.size(); ++p) {
        CHECK(w.wt[p][kn] == 0);
        CHECK(w.wt[p][a0] == w.wt[p][a1]);
        for (int x : w.wt[p]) CHECK(x >= 0);
      }
      const auto m = weight_matrix(q, w);
      for (size_t r = 0; r < m.size(); ++r) {
        CHECK(m[r][r] == 1);
        for (size_t c = 0; c < r; ++c) CHECK(m[r][c] == 0);
      }
    }
  }

  TEST_CASE("HB(0,1) carries weight 1 only at the ends") {
    const QuiverModel q = consecutive_blocks(GrassSpec{3, 3, {1, 1, 2, 1}});
    const WeightTable w = weight_table(q);
    for (size_t v = 0; v < q.vertices.size(); ++v) {
      const bool end = q.vertices[v].i == 0 || (q.vertices[v].i == 3 && q.vertices[v].j == 4);
      CHECK(w.wt[0][v] == (end ? 1 : 0));
    }
  }

  TEST_CASE("superpotential: elimination equals the closed formula and the I-series") {
    for (const GrassSpec& s : {GrassSpec{3, 3, {2, 1, 1, 1}}, GrassSpec{3, 3, {1, 1, 2, 1}}, GrassSpec{3, 3, {1, 1, 1, 2}},
                               GrassSpec{2, 3, {1, 1, 1}}, GrassSpec{2, 3, {2, 1, 1}}}) {
      CAPTURE(s.degrees.size());
      const LaurentPoly f = bcfks_laurent(s);
      CHECK(f == closed_formula_laurent(s));
      CHECK(f.vars().size() == static_cast<size_t>(s.k * s.n) - s.degrees.size());
      CHECK(phi(f, 4) == iseries_grassmannian(s, 4));
    }
  }

  TEST_CASE("G(2,5) linear section reproduces the printed model") {
    const LaurentPoly f = bcfks_laurent(GrassSpec{2, 3, {1, 1, 1}});
    CHECK(phi(f, 9) == phi(g25_model(), 9));
  }

  TEST_CASE("elimination image covers every quiver coordinate") {
    const QuiverModel q = consecutive_blocks(GrassSpec{3, 3, {1, 1, 2, 1}});
    const Substitution img = elimination_image(q, weight_table(q));
    for (const auto& name : all_variables(q)) CHECK(img.count(name) == 1);
  }

  TEST_CASE("explain output names blocks and the inverse matrix") {
    const std::string e = explain_model(GrassSpec{3, 3, {1, 1, 2, 1}});
    CHECK(e.find("B3 = MB(2,2)") != std::string::npos);
    CHECK(e.find("weight vertex (3,1)") != std::string::npos);
    CHECK(e.find("M^-1") != std::string::npos);
  }

  TEST_CASE("blocks that do not fit are rejected") {
    CHECK_THROWS_AS(consecutive_blocks(GrassSpec{2, 2, {3, 1}}), Error);
    CHECK_THROWS_AS(bcfks_laurent(GrassSpec{2, 2, {5}}), Error);
  }
}
