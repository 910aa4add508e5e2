// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlg/laurent.hpp"
#include "tlg/rational.hpp"

namespace tlg {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Q>;

// <normal, x> >= offset. Normals are primitive; height = -offset is the
// lattice distance of the facet from the origin when the origin is interior.
struct Facet {
  IVec normal;
  long long offset = 0;
  long long height() const { return -offset; }
};

// Convex hull of finitely many integer points. Vertices are exactly the hull
// vertices, sorted lexicographically; facets are sorted lexicographically by
// normal. Lower-dimensional hulls are supported (affine_dim < dim) but carry
// no facets; operations that need full dimension reject them.
class LatticePolytope {
 public:
  LatticePolytope() = default;
  static LatticePolytope hull(int dim, std::vector<IVec> points);

  int dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool full_dimensional() const { return affine_dim_ == dim_; }
  bool empty() const { return vertices_.empty(); }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // Integral equations <e, x> = rhs cutting out the affine hull.
  const std::vector<std::pair<IVec, long long>>& equations() const { return equations_; }
  // Boundary triangulation (indices into the hull's working point list) and
  // that point list; used for exact volumes.
  const std::vector<std::vector<int>>& boundary_simplices() const { return simplices_; }
  const std::vector<IVec>& triangulation_points() const { return tri_points_; }

  bool contains(const IVec& x) const;
  bool origin_interior() const;
  std::string facet_string(const Facet& f) const;

 private:
  int dim_ = 0;
  int affine_dim_ = -1;
  std::vector<IVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::pair<IVec, long long>> equations_;
  // For lower-dimensional hulls: coordinates used for the injective projection
  // and the full-dimensional hull of the projected points.
  std::vector<int> proj_coords_;
  std::vector<Facet> proj_facets_;
  std::vector<std::vector<int>> simplices_;
  std::vector<IVec> tri_points_;
};

struct RationalPolytope {
  int dim = 0;
  std::vector<QVec> vertices;  // sorted lexicographically
  bool is_integral() const;
  // Requires is_integral().
  LatticePolytope to_lattice() const;
};

enum class PointRegion { All, Boundary, Interior };

LatticePolytope newton_polytope(const LaurentPoly& f);
RationalPolytope dual(const LatticePolytope& p);
// Dual of a rational polytope with the origin interior (used for biduality
// checks on non-reflexive inputs).
RationalPolytope dual(const RationalPolytope& p);
bool is_reflexive(const LatticePolytope& p);
std::vector<IVec> lattice_points(const LatticePolytope& p, PointRegion region = PointRegion::All);
Z normalized_volume(const LatticePolytope& p);
bool equals(const LatticePolytope& p, const LatticePolytope& q);
// A in GL(n,Z) with A * vertices(p) = vertices(q) as sets, if one exists.
std::optional<IMat> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope apply_linear(const IMat& a, const LatticePolytope& p);

// Integer helpers shared by other modules.
long long gcd_vec(const IVec& v);
IVec primitive(IVec v);
// U in GL(n,Z) and its inverse with u_row * U = (g, 0, ..., 0), g = gcd > 0.
void unimodular_completion(const IVec& row, IMat* u, IMat* u_inv);
IVec mat_vec(const IMat& a, const IVec& x);
IMat mat_mul(const IMat& a, const IMat& b);
Z determinant(const IMat& a);
size_t matrix_rank(const IMat& rows, size_t ncols);

// Lattice points of the facet in coordinates of the facet's own lattice
// (dimension dim-1), translated so the first facet vertex is the origin.
std::vector<IVec> facet_lattice_coordinates(const LatticePolytope& p, const Facet& f,
                                            std::vector<IVec>* ambient_points = nullptr);

}  // namespace tlg
