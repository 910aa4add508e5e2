// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "tlg/laurent.hpp"
#include "tlg/series.hpp"

namespace tlg {

// Ladder quiver for G(k, n+k): vertices (i,j) with i in [1,k], j in [1,n],
// plus (0,1) and (k,n+1). Arrows point towards larger indices.
struct QuiverVertex {
  int i = 0;
  int j = 0;
  bool operator==(const QuiverVertex&) const = default;
};

struct QuiverArrow {
  char kind = 'v';  // 'v' for v_{i,j}: (i,j)->(i+1,j); 'h' for h_{i,j}: (i,j)->(i,j+1)
  int i = 0;
  int j = 0;
  size_t tail = 0;  // vertex indices
  size_t head = 0;
};

enum class BlockKind { Horizontal, Vertical, Mixed };

// HB(r,s): vertical arrows v_{i,j} with i in [r,s-1].
// VB(r,s): horizontal arrows h_{i,j} with j in [r,s-1].
// MB(r,s): HB(r,k) together with VB(1,s).
struct QuiverBlock {
  BlockKind kind = BlockKind::Horizontal;
  int r = 0;
  int s = 0;
  int degree = 0;
  std::vector<size_t> arrows;
};

struct QuiverModel {
  int k = 0;
  int n = 0;
  std::vector<int> degrees;
  std::vector<QuiverVertex> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverBlock> blocks;  // B_1..B_l
  std::vector<size_t> b0;           // arrows outside every block, h_{k,n} included

  size_t vertex_index(int i, int j) const;  // BadSpec when absent
  std::string block_name(size_t p) const;   // e.g. "MB(2,2)"
};

// wt[p][v] for block p (0-based, i.e. B_{p+1}) and vertex index v.
struct WeightTable {
  std::vector<std::vector<int>> wt;
};

// Consecutive blocks of sizes d_1..d_l taken in the given order: horizontal
// blocks while rows remain, at most one mixed block, then vertical blocks.
// BlocksDontFit when the degrees exhaust the columns.
QuiverModel consecutive_blocks(const GrassSpec& spec);

// Weight formulas per block kind, checked afterwards against the defining
// properties (InvariantViolated on failure).
WeightTable weight_table(const QuiverModel& q);

// Weight vertex per block: (s-1,1) for HB(r,s), (k,s-1) for VB and MB.
std::vector<QuiverVertex> weight_vertices(const QuiverModel& q);

// Coordinate names: "a" for (0,1) and (k,n+1), "a{i}{j}" otherwise
// ("a_{i}_{j}" when k or n is at least 10).
std::string quiver_variable(const QuiverModel& q, const QuiverVertex& v);
std::vector<std::string> weight_variables(const QuiverModel& q);

// The torus action on weight coordinates: M[p][t] = wt_t(weight vertex of B_p).
// Upper unitriangular.
std::vector<std::vector<long long>> weight_matrix(const QuiverModel& q, const WeightTable& w);

// Coordinates left after fixing a_{k,n} = 1 and every weight coordinate to 1:
// "a" first when it survives, then a_{i,j} in row-major order.
std::vector<std::string> surviving_variables(const QuiverModel& q);

// Sum of a_{head}/a_{tail} over the arrows, restricted to the section where
// every weight coordinate and a_{k,n} equal 1.
LaurentPoly block_sum_on_section(const QuiverModel& q, const std::vector<size_t>& arrows);

// F_A + a * prod_p F_{B_p}^{d_p} on the section, with A = B_0 minus h_{k,n}.
// A Laurent polynomial in kn - l variables.
LaurentPoly bcfks_laurent(const GrassSpec& spec);

// The same superpotential written from explicit index ranges without the
// quiver data structure; used as a cross-check of bcfks_laurent.
LaurentPoly closed_formula_laurent(const GrassSpec& spec);

// Images of every quiver coordinate under y -> (F_1(y),...,F_l(y)) . sigma(y),
// as rational expressions in the surviving variables. Keys are coordinate names
// including "a" and the fixed ones.
Substitution elimination_image(const QuiverModel& q, const WeightTable& w);

// F_{B_p} as a Laurent polynomial in every quiver coordinate (a_{k,n} included).
LaurentPoly block_sum_full(const QuiverModel& q, const std::vector<size_t>& arrows);
std::vector<std::string> all_variables(const QuiverModel& q);

// Human-readable blocks, weight table, weight vertices, M and M^{-1}.
std::string explain_model(const GrassSpec& spec);

}  // namespace tlg
