// SPDX-License-Identifier: Apache-2.0
#include "tlg/hodge.hpp"

#include <algorithm>
#include <numeric>

#include "tlg/error.hpp"

namespace tlg {

namespace {

HodgeDiamond zero_diamond(int n) {
  HodgeDiamond d;
  d.dimension = n;
  d.h.assign(n + 1, std::vector<long long>(n + 1, 0));
  return d;
}

}  // namespace

bool HodgeDiamond::is_symmetric() const {
  for (int p = 0; p <= dimension; ++p) {
    for (int q = 0; q <= dimension; ++q) {
      if (h[p][q] != h[q][p]) return false;
    }
  }
  return true;
}

SurfaceHodge kkp_surface_numbers(int d) {
  if (d < 0 || d > 9) fail("BadDegree", "del Pezzo degree must lie in [0, 9]");
  SurfaceHodge out;
  out.degree = d;
  out.relative_h2 = 12 - d;
  out.f = zero_diamond(2);
  out.f.h[0][2] = out.f.h[2][0] = 1;
  out.f.h[1][1] = 10 - d;
  out.h = zero_diamond(2);
  if (d == 0) {
    out.fano_type = false;
    out.jordan_blocks = {2, 2, 1, 1, 1, 1, 1, 1, 1, 1};
    return out;
  }
  out.jordan_blocks.push_back(3);
  for (int i = 0; i < 9 - d; ++i) out.jordan_blocks.push_back(1);
  out.h = out.f;
  return out;
}

HodgeDiamond harder_diamond(long long k_y, long long ph, long long h12z, long long h21z) {
  if (ph < 2) fail("BadInput", "ph must be at least 2");
  if (k_y < 0 || h12z < 0 || h21z < 0) fail("BadInput", "k_Y and the Hodge numbers of Z must be nonnegative");
  HodgeDiamond d = zero_diamond(3);
  d.h[0][3] = d.h[3][0] = 1;
  d.h[1][2] = ph - 2 + h12z;
  d.h[2][1] = ph - 2 + h21z;
  d.h[1][1] = d.h[2][2] = k_y;
  return d;
}

long long k_y_from_components(const std::vector<long long>& rho) {
  long long k = 0;
  for (long long r : rho) {
    if (r < 1) fail("BadInput", "every fiber has at least one component");
    k += r - 1;
  }
  return k;
}

long long components_at_infinity(const LatticePolytope& delta) {
  if (delta.dim() != 3 || !is_reflexive(delta)) fail("NotReflexive", "components at infinity need a reflexive 3-polytope");
  const LatticePolytope dl = dual(delta).to_lattice();
  const long long boundary = static_cast<long long>(lattice_points(dl, PointRegion::Boundary).size());
  const Z vol = normalized_volume(dl);
  if (vol % 2 != 0 || Z(vol / 2 + 2) != to_z(boundary)) {
    fail("Internal", "boundary count disagrees with volume/2 + 2 on a reflexive polytope");
  }
  return boundary;
}

IMat k_matrix(const std::vector<int>& degrees, int index) {
  if (index < 1) fail("BadDegrees", "index must be positive");
  for (int d : degrees) {
    if (d < 1) fail("BadDegrees", "degrees must be positive");
  }
  size_t cols = static_cast<size_t>(index - 1);
  for (int d : degrees) cols += static_cast<size_t>(d - 1);
  const size_t last = cols - static_cast<size_t>(index - 1);  // first column of the last block
  IMat rows;
  size_t c0 = 0;
  for (int d : degrees) {
    for (int r = 0; r < d; ++r) {
      IVec row(cols, 0);
      for (size_t c = 0; c + 1 < static_cast<size_t>(d); ++c) {
        row[c0 + c] = (r + 1 < d) ? (static_cast<int>(c) == r ? index : 0) : -index;
      }
      for (size_t c = last; c < cols; ++c) row[c] = -1;
      rows.push_back(row);
    }
    c0 += static_cast<size_t>(d - 1);
  }
  for (int r = 0; r < index; ++r) {
    IVec row(cols, 0);
    for (size_t c = last; c < cols; ++c) {
      row[c] = (r + 1 < index && c - last == static_cast<size_t>(r)) ? index - 1 : -1;
    }
    rows.push_back(row);
  }
  return rows;
}

long long k_components(const std::vector<int>& degrees, int index) {
  const IMat rows = k_matrix(degrees, index);
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  if (cols == 0) return 0;
  const LatticePolytope p = LatticePolytope::hull(static_cast<int>(cols), rows);
  return static_cast<long long>(lattice_points(p).size()) - 1;
}

EulerReport elliptic_euler_check(const std::vector<long long>& fibers) {
  EulerReport r;
  if (fibers.empty()) {
    r.message = "no singular fibers given";
    return r;
  }
  for (long long m : fibers) {
    if (m < 1) {
      r.message = "every singular fiber has at least one component";
      return r;
    }
  }
  r.valid = true;
  r.total = std::accumulate(fibers.begin(), fibers.end(), 0LL);
  r.closes = r.total == 12;
  r.missing_nodal = 12 - r.total;
  const long long d = *std::max_element(fibers.begin(), fibers.end());
  r.reading_d_nodal = d + d;
  r.reading_12_minus_d = d + (12 - d);
  r.message = r.closes ? "Euler numbers add up to e(Z) = 12"
                       : "Euler numbers add up to " + std::to_string(r.total) + "; " +
                             std::to_string(r.missing_nodal) + " nodal fibers are missing";
  return r;
}

}  // namespace tlg
