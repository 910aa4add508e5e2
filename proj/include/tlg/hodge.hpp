// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "tlg/polytope.hpp"

namespace tlg {

struct HodgeDiamond {
  int dimension = 0;
  std::vector<std::vector<long long>> h;  // h[p][q], p, q in [0, dimension]
  bool is_symmetric() const;
};

// Landau-Ginzburg Hodge numbers of a del Pezzo surface of degree d.
struct SurfaceHodge {
  int degree = 0;
  bool fano_type = true;
  long long relative_h2 = 0;       // dim H^2(Y, Y_b) = 12 - d
  std::vector<int> jordan_blocks;  // sizes of Jordan blocks of monodromy on H^2(Y, Y_b)
  HodgeDiamond f;                  // f^{p,q}(Y, w)
  HodgeDiamond h;                  // h^{p,q}(Y, w); zero when not of Fano type
};

// d in [0, 9]; BadDegree otherwise.
SurfaceHodge kkp_surface_numbers(int d);

// Threefold diamond with k_Y at (1,1) and (2,2), ph-2+h12Z at (1,2),
// ph-2+h21Z at (2,1) and 1 at (0,3), (3,0). BadInput when ph < 2 or an input
// is negative.
HodgeDiamond harder_diamond(long long k_y, long long ph, long long h12z, long long h21z);

// k_Y = sum (rho_s - 1) over critical values with rho_s components each.
long long k_y_from_components(const std::vector<long long>& rho);

// Boundary lattice points of the dual of a reflexive 3-polytope, checked
// against normalized_volume(dual)/2 + 2. NotReflexive otherwise.
long long components_at_infinity(const LatticePolytope& delta);

// The matrix M_{d_1..d_k; i}: block j has d_j rows and d_j - 1 columns (rows
// i*e_r for r < d_j and a last row -i*(1,...,1)); the last block has i rows
// and i - 1 columns (rows i*e_r - (1,...,1) and a last row -(1,...,1)).
// Entries in last-block columns are -1 outside the last block. BadDegrees
// when a degree or the index is not positive.
IMat k_matrix(const std::vector<int>& degrees, int index);

// Lattice points in the convex hull of the rows of k_matrix, minus one.
long long k_components(const std::vector<int>& degrees, int index);

// Euler characteristic bookkeeping for a rational elliptic surface with a
// wheel of `wheel` curves over infinity and singular fibers listed by their
// number of components (1 for a nodal curve, m for a wheel of m curves).
struct EulerReport {
  bool valid = false;
  std::string message;
  long long total = 0;             // sum of fiber Euler numbers listed
  bool closes = false;             // total == 12
  long long missing_nodal = 0;     // 12 - total
  long long reading_d_nodal = 0;   // Euler sum if the wheel comes with d nodal fibers
  long long reading_12_minus_d = 0;  // Euler sum if it comes with 12 - d nodal fibers
};
EulerReport elliptic_euler_check(const std::vector<long long>& singular_fiber_components);

}  // namespace tlg
