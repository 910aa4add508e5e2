// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tlg/polytope.hpp"
#include "tlg/rational.hpp"

namespace tlg {

using ZMat = std::vector<std::vector<Z>>;

// A lattice Z^n with a symmetric integer Gram matrix.
struct GramLattice {
  IMat gram;
  size_t rank() const { return gram.size(); }
  bool is_even() const;
};

// Names: "H", "A<n>", "D<n>" (n >= 4), "E6", "E7", "E8", "<m>" (rank one,
// m may be negative), "M" = H + E8(-1)^2 and "M_<n>" = M + <-2n>. Root
// lattices are positive definite; twist -1 negates the form ("E8(-1)").
GramLattice standard_lattice(const std::string& name, int twist = 1);
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice twisted(const GramLattice& a, int twist);

// U * a * V = diag(d_1, ..., d_r, 0, ...) with d_i | d_{i+1}, d_i > 0 and
// U, V unimodular.
struct SmithForm {
  std::vector<Z> diagonal;  // length min(rows, cols)
  ZMat u;
  ZMat v;
};
SmithForm smith_normal_form(const ZMat& a);

Z lattice_determinant(const GramLattice& l);

// D(L) = L*/L. Generators are vectors of L* in the basis of L; form values
// are q(g) = <g, g> reduced into [0, 2).
struct DiscriminantData {
  std::vector<Z> group;  // elementary divisors > 1
  std::vector<QVec> generators;
  std::vector<Q> form_values;
};
DiscriminantData discriminant(const GramLattice& l);

// x reduced into [0, 2).
Q mod2(const Q& x);

// True when some unit multiple u*g (gcd(u, order) = 1) of the cyclic
// generator has q(u*g) = value mod 2.
bool cyclic_form_attains(const Q& q_generator, const Z& order, const Q& value);

// [sup : sub] for an isometric full-rank embedding whose rows are the images
// of the basis of sub; checks [sup:sub]^2 = d(sub)/d(sup).
Z index_check(const GramLattice& sub, const GramLattice& sup, const IMat& embedding);

// (positive, negative) inertia indices.
std::pair<int, int> signature(const GramLattice& l);

// Rows span the primitive orthogonal complement of the image of `embedding`
// in sup; the complement lattice is returned with its induced Gram matrix.
GramLattice orthogonal_complement(const GramLattice& sup, const IMat& embedding, IMat* basis = nullptr);

// Local intersection data at a du Val point.
struct DuValPoint {
  char type = 'A';  // 'A', 'D' or 'E'
  int n = 1;
};

// (C.Z)_O for smooth transversal curves meeting the k-th and r-th
// exceptional curves of an A_n point, or 1/2 at a D_n point.
Q duval_intersection(const DuValPoint& sing, int k, int r);

// C^2 - C~^2 for a curve smooth at O: k(n+1-k)/(n+1) at A_n (k-th curve);
// 1 or n/4 at D_n (second_branch selects n/4); 4/3 at E_6; 3/2 at E_7.
Q duval_self_intersection(const DuValPoint& sing, int k, bool second_branch = false);

}  // namespace tlg
