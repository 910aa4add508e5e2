// SPDX-License-Identifier: Apache-2.0
#include "tlg/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tlg/error.hpp"

namespace tlg {

namespace {

using i128 = __int128;

long long to_ll(i128 v) {
  if (v > static_cast<i128>(std::numeric_limits<long long>::max()) ||
      v < static_cast<i128>(std::numeric_limits<long long>::min())) {
    fail("Overflow", "integer coordinate exceeds 64 bits");
  }
  return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Fraction-free (Bareiss) determinant of a small square matrix.
i128 det128(std::vector<std::vector<i128>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  i128 sign = 1;
  i128 prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

long long dot(const IVec& a, const IVec& b) {
  i128 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
  return to_ll(s);
}

// Incremental row echelon form over Z for rank queries.
class Echelon {
 public:
  explicit Echelon(size_t n) : n_(n) {}

  // Returns true when v is independent of the rows so far (and records it).
  bool insert(const IVec& v) {
    std::vector<i128> w(v.begin(), v.end());
    for (size_t r = 0; r < rows_.size(); ++r) {
      const size_t c = pivots_[r];
      if (w[c] == 0) continue;
      const i128 a = rows_[r][c];
      const i128 b = w[c];
      i128 g = 0;
      for (size_t j = 0; j < n_; ++j) {
        w[j] = a * w[j] - b * rows_[r][j];
        g = gcd128(g, w[j]);
      }
      if (g > 1) {
        for (auto& x : w) x /= g;
      }
    }
    size_t piv = 0;
    while (piv < n_ && w[piv] == 0) ++piv;
    if (piv == n_) return false;
    rows_.push_back(w);
    pivots_.push_back(piv);
    return true;
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<size_t>& pivots() const { return pivots_; }
  const std::vector<std::vector<i128>>& rows() const { return rows_; }

 private:
  size_t n_;
  std::vector<std::vector<i128>> rows_;
  std::vector<size_t> pivots_;
};

struct Simplex {
  std::vector<int> v;  // sorted point indices
  IVec normal;
  long long offset = 0;
  bool alive = true;
};

struct FullHull {
  std::vector<Simplex> simplices;
  std::vector<IVec> points;
};

// Hyperplane through d points in Z^d, oriented so that the reference point
// ref/scale lies strictly on the positive side.
void hyperplane(const std::vector<IVec>& pts, const std::vector<int>& idx, const IVec& ref_sum,
                long long ref_scale, IVec* normal, long long* offset) {
  const size_t d = pts[idx[0]].size();
  std::vector<std::vector<i128>> diff(d - 1, std::vector<i128>(d));
  for (size_t r = 1; r < idx.size(); ++r) {
    for (size_t j = 0; j < d; ++j) diff[r - 1][j] = pts[idx[r]][j] - pts[idx[0]][j];
  }
  std::vector<i128> n(d);
  for (size_t i = 0; i < d; ++i) {
    std::vector<std::vector<i128>> minor(d - 1, std::vector<i128>());
    for (size_t r = 0; r + 1 < d; ++r) {
      for (size_t j = 0; j < d; ++j) {
        if (j != i) minor[r].push_back(diff[r][j]);
      }
    }
    const i128 m = det128(minor);
    n[i] = (i % 2 == 0) ? m : -m;
  }
  i128 g = 0;
  for (auto x : n) g = gcd128(g, x);
  if (g == 0) fail("Internal", "degenerate hyperplane in hull construction");
  IVec out(d);
  for (size_t i = 0; i < d; ++i) out[i] = to_ll(n[i] / g);
  long long off = dot(out, pts[idx[0]]);
  const i128 side = static_cast<i128>(dot(out, ref_sum)) - static_cast<i128>(ref_scale) * off;
  if (side < 0) {
    for (auto& x : out) x = -x;
    off = -off;
  }
  *normal = std::move(out);
  *offset = off;
}

FullHull full_hull(const std::vector<IVec>& pts, const std::vector<int>& initial) {
  const size_t d = pts[0].size();
  FullHull h;
  h.points = pts;
  IVec ref(d, 0);
  for (int i : initial) {
    for (size_t j = 0; j < d; ++j) ref[j] += pts[i][j];
  }
  const long long scale = static_cast<long long>(initial.size());
  for (size_t skip = 0; skip < initial.size(); ++skip) {
    Simplex s;
    for (size_t k = 0; k < initial.size(); ++k) {
      if (k != skip) s.v.push_back(initial[k]);
    }
    std::sort(s.v.begin(), s.v.end());
    hyperplane(pts, s.v, ref, scale, &s.normal, &s.offset);
    h.simplices.push_back(std::move(s));
  }
  std::vector<bool> used(pts.size(), false);
  for (int i : initial) used[i] = true;
  for (size_t p = 0; p < pts.size(); ++p) {
    if (used[p]) continue;
    std::vector<size_t> visible;
    for (size_t s = 0; s < h.simplices.size(); ++s) {
      const auto& sx = h.simplices[s];
      if (sx.alive && dot(sx.normal, pts[p]) < sx.offset) visible.push_back(s);
    }
    if (visible.empty()) continue;
    std::map<std::vector<int>, int> ridges;
    for (size_t s : visible) {
      const auto& v = h.simplices[s].v;
      for (size_t k = 0; k < v.size(); ++k) {
        std::vector<int> r;
        r.reserve(v.size() - 1);
        for (size_t j = 0; j < v.size(); ++j) {
          if (j != k) r.push_back(v[j]);
        }
        ++ridges[r];
      }
      h.simplices[s].alive = false;
    }
    for (const auto& [r, count] : ridges) {
      if (count != 1) continue;
      Simplex s;
      s.v = r;
      s.v.push_back(static_cast<int>(p));
      std::sort(s.v.begin(), s.v.end());
      hyperplane(pts, s.v, ref, scale, &s.normal, &s.offset);
      h.simplices.push_back(std::move(s));
    }
    // Compact occasionally so scans stay proportional to the live surface.
    if (h.simplices.size() > 4096) {
      std::vector<Simplex> live;
      for (auto& s : h.simplices) {
        if (s.alive) live.push_back(std::move(s));
      }
      h.simplices = std::move(live);
    }
  }
  std::vector<Simplex> live;
  for (auto& s : h.simplices) {
    if (s.alive) live.push_back(std::move(s));
  }
  h.simplices = std::move(live);
  return h;
}

// Initial affinely independent points; also yields the affine rank and the
// pivot columns of the difference space.
std::vector<int> independent_points(const std::vector<IVec>& pts, Echelon* ech) {
  std::vector<int> chosen{0};
  const size_t d = pts[0].size();
  for (size_t i = 1; i < pts.size() && ech->rank() < d; ++i) {
    IVec diff(d);
    for (size_t j = 0; j < d; ++j) diff[j] = pts[i][j] - pts[0][j];
    if (ech->insert(diff)) chosen.push_back(static_cast<int>(i));
  }
  return chosen;
}

size_t normal_rank(const std::vector<const IVec*>& normals, size_t d) {
  Echelon e(d);
  for (const IVec* n : normals) e.insert(*n);
  return e.rank();
}

struct HullResult {
  std::vector<IVec> vertices;
  std::vector<Facet> facets;
  std::vector<std::vector<int>> simplices;
  std::vector<IVec> points;
};

HullResult hull_full_dimensional(const std::vector<IVec>& pts, const std::vector<int>& initial) {
  const size_t d = pts[0].size();
  HullResult out;
  if (d == 0) {
    out.vertices = pts;
    return out;
  }
  FullHull h = full_hull(pts, initial);
  std::map<std::pair<IVec, long long>, bool> facet_set;
  for (const auto& s : h.simplices) facet_set[{s.normal, s.offset}] = true;
  for (const auto& [key, unused] : facet_set) out.facets.push_back(Facet{key.first, key.second});
  std::set<int> candidates;
  for (const auto& s : h.simplices) candidates.insert(s.v.begin(), s.v.end());
  for (int c : candidates) {
    std::vector<const IVec*> incident;
    for (const auto& f : out.facets) {
      if (dot(f.normal, pts[c]) == f.offset) incident.push_back(&f.normal);
    }
    if (normal_rank(incident, d) == d) out.vertices.push_back(pts[c]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& s : h.simplices) out.simplices.push_back(s.v);
  out.points = std::move(h.points);
  return out;
}

}  // namespace

long long gcd_vec(const IVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IVec primitive(IVec v) {
  const long long g = gcd_vec(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

LatticePolytope LatticePolytope::hull(int dim, std::vector<IVec> points) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) fail("DimensionMismatch", "point of wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LatticePolytope P;
  P.dim_ = dim;
  if (points.empty()) return P;
  const size_t d = static_cast<size_t>(dim);
  Echelon ech(d);
  std::vector<int> initial = independent_points(points, &ech);
  const size_t r = ech.rank();
  P.affine_dim_ = static_cast<int>(r);
  if (r == d) {
    HullResult h = hull_full_dimensional(points, initial);
    P.vertices_ = std::move(h.vertices);
    P.facets_ = std::move(h.facets);
    P.simplices_ = std::move(h.simplices);
    P.tri_points_ = std::move(h.points);
    return P;
  }
  // Lower-dimensional: project onto pivot coordinates (injective on the
  // affine hull), take the hull there, and record the affine equations.
  std::vector<size_t> piv = ech.pivots();
  std::sort(piv.begin(), piv.end());
  for (size_t c : piv) P.proj_coords_.push_back(static_cast<int>(c));
  std::vector<IVec> proj;
  for (const auto& p : points) {
    IVec q;
    for (size_t c : piv) q.push_back(p[c]);
    proj.push_back(q);
  }
  if (r == 0) {
    P.vertices_ = {points[0]};
  } else {
    HullResult h = hull_full_dimensional(proj, initial);
    for (const auto& v : h.vertices) {
      auto it = std::find(proj.begin(), proj.end(), v);
      P.vertices_.push_back(points[static_cast<size_t>(it - proj.begin())]);
    }
    std::sort(P.vertices_.begin(), P.vertices_.end());
    P.proj_facets_ = std::move(h.facets);
  }
  // Orthogonal complement of the difference space: reduce the echelon rows
  // to a rational RREF and read off one kernel vector per free column.
  std::vector<std::vector<Q>> rref;
  {
    const auto& rows = ech.rows();
    const auto& pv = ech.pivots();
    std::vector<size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pv[a] < pv[b]; });
    for (size_t i : order) {
      std::vector<Q> row(d);
      for (size_t j = 0; j < d; ++j) row[j] = Q(Z(std::to_string(static_cast<long long>(rows[i][j]))));
      rref.push_back(row);
    }
    for (size_t i = 0; i < rref.size(); ++i) {
      const size_t c = piv[i];
      const Q lead = rref[i][c];
      for (auto& x : rref[i]) x /= lead;
      for (size_t k = 0; k < rref.size(); ++k) {
        if (k == i || rref[k][c] == 0) continue;
        const Q f = rref[k][c];
        for (size_t j = 0; j < d; ++j) rref[k][j] -= f * rref[i][j];
      }
    }
  }
  std::vector<bool> is_piv(d, false);
  for (size_t c : piv) is_piv[c] = true;
  for (size_t free = 0; free < d; ++free) {
    if (is_piv[free]) continue;
    std::vector<Q> x(d, Q(0));
    x[free] = 1;
    for (size_t i = 0; i < rref.size(); ++i) x[piv[i]] = -rref[i][free];
    Z l = 1;
    for (const auto& q : x) l = lcm(l, Z(q.get_den()));
    IVec e(d);
    for (size_t j = 0; j < d; ++j) e[j] = Q(x[j] * l).get_num().get_si();
    e = primitive(e);
    P.equations_.emplace_back(e, dot(e, points[0]));
  }
  return P;
}

bool LatticePolytope::contains(const IVec& x) const {
  if (vertices_.empty()) return false;
  if (full_dimensional()) {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return dot(f.normal, x) >= f.offset; });
  }
  for (const auto& [e, rhs] : equations_) {
    if (dot(e, x) != rhs) return false;
  }
  if (affine_dim_ == 0) return x == vertices_[0];
  IVec q;
  for (int c : proj_coords_) q.push_back(x[c]);
  return std::all_of(proj_facets_.begin(), proj_facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, q) >= f.offset; });
}

bool LatticePolytope::origin_interior() const {
  if (!full_dimensional()) return false;
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset < 0; });
}

std::string LatticePolytope::facet_string(const Facet& f) const {
  std::ostringstream out;
  out << "⟨(";
  for (size_t i = 0; i < f.normal.size(); ++i) out << (i ? "," : "") << f.normal[i];
  out << "),x⟩ >= " << f.offset;
  return out.str();
}

bool RationalPolytope::is_integral() const {
  for (const auto& v : vertices) {
    for (const auto& x : v) {
      if (x.get_den() != 1) return false;
    }
  }
  return true;
}

LatticePolytope RationalPolytope::to_lattice() const {
  if (!is_integral()) fail("NotIntegral", "polytope has non-integral vertices");
  std::vector<IVec> pts;
  for (const auto& v : vertices) {
    IVec p;
    for (const auto& x : v) p.push_back(x.get_num().get_si());
    pts.push_back(p);
  }
  return LatticePolytope::hull(dim, pts);
}

LatticePolytope newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) fail("ZeroPolynomial", "Newton polytope of the zero polynomial");
  std::vector<IVec> pts;
  for (const auto& [e, c] : f.terms()) pts.emplace_back(e.begin(), e.end());
  return LatticePolytope::hull(static_cast<int>(f.nvars()), pts);
}

RationalPolytope dual(const LatticePolytope& p) {
  if (!p.full_dimensional() || !p.origin_interior()) {
    fail("OriginNotInterior", "dual requires a full-dimensional polytope with the origin strictly inside");
  }
  RationalPolytope r;
  r.dim = p.dim();
  for (const auto& f : p.facets()) {
    QVec v;
    for (long long x : f.normal) v.push_back(Q(Z(static_cast<long>(x)), Z(static_cast<long>(f.height()))));
    for (auto& x : v) x.canonicalize();
    r.vertices.push_back(v);
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  return r;
}

RationalPolytope dual(const RationalPolytope& p) {
  Z l = 1;
  for (const auto& v : p.vertices) {
    for (const auto& x : v) l = lcm(l, Z(x.get_den()));
  }
  std::vector<IVec> pts;
  for (const auto& v : p.vertices) {
    IVec q;
    for (const auto& x : v) q.push_back(Q(x * l).get_num().get_si());
    pts.push_back(q);
  }
  LatticePolytope scaled = LatticePolytope::hull(p.dim, pts);
  if (!scaled.origin_interior()) fail("OriginNotInterior", "dual requires the origin strictly inside");
  RationalPolytope r;
  r.dim = p.dim;
  for (const auto& f : scaled.facets()) {
    QVec v;
    for (long long x : f.normal) {
      Q q(Z(static_cast<long>(x)) * l, Z(static_cast<long>(f.height())));
      q.canonicalize();
      v.push_back(q);
    }
    r.vertices.push_back(v);
  }
  std::sort(r.vertices.begin(), r.vertices.end());
  return r;
}

bool is_reflexive(const LatticePolytope& p) {
  if (!p.origin_interior()) fail("OriginNotInterior", "reflexivity requires the origin strictly inside");
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.height() == 1; });
}

std::vector<IVec> lattice_points(const LatticePolytope& p, PointRegion region) {
  std::vector<IVec> out;
  if (p.empty()) return out;
  const size_t d = static_cast<size_t>(p.dim());
  if (d == 0) {
    if (region != PointRegion::Interior) out.push_back(IVec());
    return out;
  }
  IVec lo = p.vertices()[0], hi = p.vertices()[0];
  for (const auto& v : p.vertices()) {
    for (size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  IVec x = lo;
  while (true) {
    if (p.contains(x)) {
      bool boundary = !p.full_dimensional();
      if (!boundary) {
        for (const auto& f : p.facets()) {
          if (dot(f.normal, x) == f.offset) {
            boundary = true;
            break;
          }
        }
      }
      if (region == PointRegion::All || (region == PointRegion::Boundary) == boundary) out.push_back(x);
    }
    size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

Z normalized_volume(const LatticePolytope& p) {
  if (!p.full_dimensional()) fail("NotFullDimensional", "volume requires a full-dimensional polytope");
  const size_t d = static_cast<size_t>(p.dim());
  if (d == 0) return Z(1);
  const auto& pts = p.triangulation_points();
  // Cone over the boundary triangulation from a fixed hull vertex.
  const IVec& apex = p.vertices()[0];
  Z total = 0;
  for (const auto& s : p.boundary_simplices()) {
    std::vector<std::vector<i128>> m(d, std::vector<i128>(d));
    for (size_t r = 0; r < d; ++r) {
      for (size_t j = 0; j < d; ++j) m[r][j] = pts[s[r]][j] - apex[j];
    }
    i128 v = det128(m);
    if (v < 0) v = -v;
    total += Z(std::to_string(to_ll(v)));
  }
  return total;
}

bool equals(const LatticePolytope& p, const LatticePolytope& q) {
  return p.dim() == q.dim() && p.vertices() == q.vertices();
}

IVec mat_vec(const IMat& a, const IVec& x) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

IMat mat_mul(const IMat& a, const IMat& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IMat r(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      i128 s = 0;
      for (size_t t = 0; t < k; ++t) s += static_cast<i128>(a[i][t]) * b[t][j];
      r[i][j] = to_ll(s);
    }
  }
  return r;
}

Z determinant(const IMat& a) {
  const size_t n = a.size();
  if (n == 0) return Z(1);
  std::vector<std::vector<Z>> m(n, std::vector<Z>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Z(std::to_string(a[i][j]));
  }
  Z sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return Z(0);
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

size_t matrix_rank(const IMat& rows, size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

LatticePolytope apply_linear(const IMat& a, const LatticePolytope& p) {
  std::vector<IVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(mat_vec(a, v));
  return LatticePolytope::hull(static_cast<int>(a.size()), pts);
}

std::optional<IMat> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() > 4 || q.dim() > 4) fail("DimensionTooLarge", "unimodular search supports dimension <= 4");
  if (p.dim() != q.dim()) return std::nullopt;
  if (!p.full_dimensional() || !q.full_dimensional()) {
    fail("NotFullDimensional", "unimodular search requires full-dimensional polytopes");
  }
  const size_t d = static_cast<size_t>(p.dim());
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (pv.size() != qv.size() || p.facets().size() != q.facets().size()) return std::nullopt;

  auto vertex_degree = [](const LatticePolytope& P, const IVec& v) {
    int c = 0;
    for (const auto& f : P.facets()) c += dot(f.normal, v) == f.offset;
    return c;
  };
  std::vector<int> qdeg;
  for (const auto& v : qv) qdeg.push_back(vertex_degree(q, v));

  // Linear basis among p's vertices.
  std::vector<size_t> basis;
  {
    Echelon e(d);
    for (size_t i = 0; i < pv.size() && basis.size() < d; ++i) {
      if (e.insert(pv[i])) basis.push_back(i);
    }
  }
  if (basis.size() < d) return std::nullopt;
  std::vector<int> bdeg;
  for (size_t i : basis) bdeg.push_back(vertex_degree(p, pv[i]));

  // B has the basis vertices as columns; adj(B) = det(B) * B^{-1}.
  IMat b(d, IVec(d));
  for (size_t c = 0; c < d; ++c) {
    for (size_t r = 0; r < d; ++r) b[r][c] = pv[basis[c]][r];
  }
  const long long det_b = determinant(b).get_si();
  IMat adj(d, IVec(d));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      IMat minor;
      for (size_t r = 0; r < d; ++r) {
        if (r == j) continue;
        IVec row;
        for (size_t c = 0; c < d; ++c) {
          if (c != i) row.push_back(b[r][c]);
        }
        minor.push_back(row);
      }
      const long long m = determinant(minor).get_si();
      adj[i][j] = ((i + j) % 2 == 0) ? m : -m;
    }
  }
  const std::set<IVec> qset(qv.begin(), qv.end());
  std::vector<size_t> choice(d, 0);
  std::vector<bool> used(qv.size(), false);

  std::optional<IMat> found;
  std::function<void(size_t)> search = [&](size_t level) {
    if (found) return;
    if (level == d) {
      IMat c(d, IVec(d));
      for (size_t col = 0; col < d; ++col) {
        for (size_t r = 0; r < d; ++r) c[r][col] = qv[choice[col]][r];
      }
      IMat num = mat_mul(c, adj);
      IMat a(d, IVec(d));
      for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
          if (num[i][j] % det_b != 0) return;
          a[i][j] = num[i][j] / det_b;
        }
      }
      const Z da = determinant(a);
      if (da != 1 && da != -1) return;
      for (const auto& v : pv) {
        if (!qset.count(mat_vec(a, v))) return;
      }
      found = a;
      return;
    }
    for (size_t j = 0; j < qv.size(); ++j) {
      if (used[j] || qdeg[j] != bdeg[level]) continue;
      used[j] = true;
      choice[level] = j;
      search(level + 1);
      used[j] = false;
      if (found) return;
    }
  };
  search(0);
  return found;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim()) fail("DimensionMismatch", "Minkowski sum of polytopes in different dimensions");
  std::vector<IVec> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      IVec s(a.size());
      for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(s);
    }
  }
  return LatticePolytope::hull(p.dim(), pts);
}

void unimodular_completion(const IVec& row, IMat* u, IMat* u_inv) {
  const size_t n = row.size();
  IMat U(n, IVec(n, 0)), V(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) U[i][i] = V[i][i] = 1;
  IVec w = row;
  for (size_t i = 1; i < n; ++i) {
    if (w[i] == 0) continue;
    // Extended gcd of (w0, wi).
    long long old_r = w[0], r = w[i], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long long qt = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    const long long g = old_r, x = old_s, y = old_t;
    const long long a = w[0] / g, b = w[i] / g;
    for (size_t k = 0; k < n; ++k) {
      const long long c0 = U[k][0], ci = U[k][i];
      U[k][0] = x * c0 + y * ci;
      U[k][i] = -b * c0 + a * ci;
    }
    for (size_t k = 0; k < n; ++k) {
      const long long r0 = V[0][k], ri = V[i][k];
      V[0][k] = a * r0 + b * ri;
      V[i][k] = -y * r0 + x * ri;
    }
    w[0] = g;
    w[i] = 0;
  }
  if (w[0] < 0) {
    for (size_t k = 0; k < n; ++k) {
      U[k][0] = -U[k][0];
      V[0][k] = -V[0][k];
    }
  }
  *u = U;
  *u_inv = V;
}

std::vector<IVec> facet_lattice_coordinates(const LatticePolytope& p, const Facet& f,
                                            std::vector<IVec>* ambient_points) {
  std::vector<IVec> on;
  for (const auto& x : lattice_points(p, PointRegion::Boundary)) {
    if (dot(f.normal, x) == f.offset) on.push_back(x);
  }
  IMat u, v;
  unimodular_completion(f.normal, &u, &v);
  std::vector<IVec> out;
  IVec base;
  for (size_t k = 0; k < on.size(); ++k) {
    IVec y = mat_vec(v, on[k]);
    IVec z(y.begin() + 1, y.end());
    if (k == 0) base = z;
    for (size_t i = 0; i < z.size(); ++i) z[i] -= base[i];
    out.push_back(z);
  }
  if (ambient_points) *ambient_points = on;
  return out;
}

}  // namespace tlg
