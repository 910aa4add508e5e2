// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlg/laurent.hpp"
#include "tlg/polytope.hpp"
#include "tlg/series.hpp"

namespace tlg {

// ---------------------------------------------------------------------------
// Weighted complete intersections

enum class NefQuality { Plain, Good, VeryGood };

struct NefPartition {
  // groups[0] = E_0, groups[i] = E_i for hypersurface i; indices into weights.
  std::vector<std::vector<int>> groups;
  NefQuality quality = NefQuality::Plain;
};

// Every partition of [0, N] into E_0..E_l with sum_{E_i} w = d_i (i >= 1)
// whose quality is at least `want`, in a deterministic order.
std::vector<NefPartition> find_nef_partitions(const WciSpec& spec, NefQuality want);

// Quality of an explicit partition, or BadPartition when the degree sums fail.
NefQuality classify_partition(const WciSpec& spec, const NefPartition& part);

// The Laurent polynomial
//   prod_{i>=1} (sum_{j in E_i'} x_{ij} + 1)^{d_i} / prod_{i,j} x_{ij}^{w_{ij}} + sum_{j in E_0'} x_{0j}
// where E_i' drops one index: the last index of largest weight for i >= 1 and
// the last weight-1 index for E_0. Variables are named x,y,z,w for up to four
// variables and x1..xm otherwise, in (group, index) order with E_1..E_l first and E_0 last.
LaurentPoly wci_laurent(const WciSpec& spec, const NefPartition& part);
// First very good partition if any, else first good one; BadPartition if none.
LaurentPoly wci_laurent(const WciSpec& spec);

// ---------------------------------------------------------------------------
// Binomial principle

// Names used for an n-variable polynomial: x,y,z,w up to four, else x1..xn.
std::vector<std::string> default_variable_names(size_t n);

// Coefficient 1 at vertices, C(n,i) at the i-th lattice point of an edge of
// lattice length n, 0 at the origin. Every other lattice point must lie on an
// edge (InteriorFacetPoint otherwise).
LaurentPoly binomial_principle(const LatticePolytope& p);

// Pairs of vertex indices forming the edges of a full-dimensional polytope.
std::vector<std::pair<size_t, size_t>> polytope_edges(const LatticePolytope& p);

// ---------------------------------------------------------------------------
// Minkowski polynomials

// n when q (a polygon in Z^2, or a segment) has type A_n; nullopt otherwise.
std::optional<int> is_An_polygon(const LatticePolytope& q);

// f_P for a polygon of type A_n, in variables (x,y) of the polygon's lattice.
LaurentPoly an_polynomial(const LatticePolytope& q, const std::vector<std::string>& vars = {"x", "y"});

struct FacetCertificate {
  Facet facet;
  // Summands in the facet's own lattice coordinates (as produced by
  // facet_lattice_coordinates); each is a vertex list.
  std::vector<std::vector<IVec>> summands;
};

struct MinkowskiCertificate {
  std::vector<FacetCertificate> facets;
};

struct MinkowskiResult {
  std::optional<MinkowskiCertificate> certificate;
  std::string detail;  // explanation when no certificate was found
};

// Builds the Minkowski polynomial of a reflexive 3-polytope from a
// certificate; BadCertificate when summands do not decompose the facets or
// restrictions disagree on shared edges.
LaurentPoly minkowski_polynomial(const LatticePolytope& p, const MinkowskiCertificate& cert);

// Searches admissible lattice Minkowski decompositions (at most
// `max_summands` per facet) matching the restrictions of f to every facet.
MinkowskiResult check_minkowski(const LaurentPoly& f, int max_summands = 4);

// All admissible lattice Minkowski decompositions of a lattice polygon into
// A_n summands, bounded by max_summands. Used by check_minkowski.
std::vector<std::vector<LatticePolytope>> minkowski_decompositions(const LatticePolytope& q, int max_summands);

// ---------------------------------------------------------------------------
// del Pezzo surfaces

enum class DelPezzoBase { P2, Quadric, QuadricF2 };
enum class CoefficientMode { Toric, Surface };

struct DelPezzoScript {
  DelPezzoBase base = DelPezzoBase::P2;
  std::vector<IVec> steps;          // lattice points added in order (P2 base only)
  std::vector<std::string> params;  // parameter variable names; defaults q0.. or qa,qb
};

// Variables are (x, y, params...).
LaurentPoly del_pezzo_model(const DelPezzoScript& script, CoefficientMode mode);
std::vector<std::string> del_pezzo_params(const DelPezzoScript& script);

// Substitutes 1 for every variable in `params`, returning a polynomial in the
// other variables.
LaurentPoly set_parameters_to_one(const LaurentPoly& f, const std::vector<std::string>& params);

}  // namespace tlg
