// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tlg/builders.hpp"
#include "tlg/error.hpp"

namespace tlg {

namespace {

IVec add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

long long cross(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// Primitive edge directions of a polygon in counterclockwise order.
std::vector<IVec> edge_directions(const LatticePolytope& q) {
  std::vector<std::pair<long double, IVec>> dirs;
  for (const auto& f : q.facets()) {
    // Inner normal (a,b) has the counterclockwise edge direction (b,-a).
    IVec d{f.normal[1], -f.normal[0]};
    dirs.emplace_back(std::atan2(static_cast<long double>(d[1]), static_cast<long double>(d[0])), d);
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<IVec> out;
  for (auto& [angle, d] : dirs) out.push_back(d);
  return out;
}

// Key of a shape up to translation: vertex list shifted so the smallest
// vertex is the origin.
std::vector<IVec> shape_key(const LatticePolytope& p) {
  std::vector<IVec> vs = p.vertices();
  const IVec base = vs.front();
  for (auto& v : vs) v = sub(v, base);
  return vs;
}

// Candidate A_n summands (at a canonical position) whose edge directions all
// occur among the edges of the polygon or segment r.
std::vector<LatticePolytope> summand_candidates(const LatticePolytope& r) {
  std::vector<LatticePolytope> out;
  if (r.affine_dim() == 1) {
    IVec d = primitive(sub(r.vertices()[1], r.vertices()[0]));
    out.push_back(LatticePolytope::hull(2, {IVec{0, 0}, d}));
    return out;
  }
  const auto dirs = edge_directions(r);
  const size_t m = dirs.size();
  std::set<IVec> dirset(dirs.begin(), dirs.end());
  for (const auto& d : dirs) {
    const IVec neg{-d[0], -d[1]};
    if (dirset.count(neg) && (d[0] > 0 || (d[0] == 0 && d[1] > 0))) {
      out.push_back(LatticePolytope::hull(2, {IVec{0, 0}, d}));
    }
  }
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = a + 1; b < m; ++b) {
      for (size_t c = b + 1; c < m; ++c) {
        const size_t idx[3] = {a, b, c};
        for (int longest = 0; longest < 3; ++longest) {
          const IVec& dl = dirs[idx[longest]];
          const IVec& d1 = dirs[idx[(longest + 1) % 3]];
          const IVec& d2 = dirs[idx[(longest + 2) % 3]];
          const IVec s = add(d1, d2);
          // Need s = -n * dl with n >= 1.
          if (cross(s, dl) != 0) continue;
          long long n = 0;
          if (dl[0] != 0) {
            if (s[0] % dl[0] != 0) continue;
            n = -s[0] / dl[0];
          } else {
            if (s[1] % dl[1] != 0) continue;
            n = -s[1] / dl[1];
          }
          if (n < 1) continue;
          IVec lam[3];
          lam[longest] = IVec{n * dl[0], n * dl[1]};
          lam[(longest + 1) % 3] = d1;
          lam[(longest + 2) % 3] = d2;
          const IVec p1 = lam[0], p2 = add(lam[0], lam[1]);
          LatticePolytope t = LatticePolytope::hull(2, {IVec{0, 0}, p1, p2});
          if (is_An_polygon(t)) out.push_back(t);
        }
      }
    }
  }
  // Deduplicate by shape.
  std::map<std::vector<IVec>, LatticePolytope> unique;
  for (auto& p : out) unique.emplace(shape_key(p), p);
  out.clear();
  for (auto& [k, p] : unique) out.push_back(p);
  return out;
}

// Lattice polygon r' with p + r' = r, if one exists. Candidates have a
// vertex at the origin, so r' consists of points x with x + p inside r.
std::optional<LatticePolytope> minkowski_difference(const LatticePolytope& r, const LatticePolytope& p) {
  std::vector<IVec> pts;
  for (const auto& x : lattice_points(r)) {
    bool ok = true;
    for (const auto& v : p.vertices()) {
      if (!r.contains(add(x, v))) {
        ok = false;
        break;
      }
    }
    if (ok) pts.push_back(x);
  }
  if (pts.empty()) return std::nullopt;
  LatticePolytope d = LatticePolytope::hull(2, pts);
  if (!equals(minkowski_sum(d, p), r)) return std::nullopt;
  return d;
}

// Rank and covolume of the lattice spanned by differences of the points.
std::pair<size_t, long long> affine_lattice(const std::vector<IVec>& pts) {
  if (pts.size() < 2) return {0, 1};
  std::vector<IVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  const size_t rank = matrix_rank(diffs, 2);
  long long g = 0;
  if (rank == 2) {
    for (size_t i = 0; i < diffs.size(); ++i) {
      for (size_t j = i + 1; j < diffs.size(); ++j) g = std::gcd(g, std::llabs(cross(diffs[i], diffs[j])));
    }
  } else {
    for (const auto& d : diffs) g = std::gcd(g, gcd_vec(d));
  }
  return {rank, g};
}

bool admissible(const LatticePolytope& q, const std::vector<LatticePolytope>& summands) {
  const auto target = affine_lattice(lattice_points(q));
  std::vector<IVec> gens{IVec{0, 0}};
  for (const auto& s : summands) {
    const auto pts = lattice_points(s);
    for (size_t i = 1; i < pts.size(); ++i) gens.push_back(sub(pts[i], pts[0]));
  }
  return affine_lattice(gens) == target;
}

LatticePolytope translate(const LatticePolytope& p, const IVec& t) {
  std::vector<IVec> vs;
  for (const auto& v : p.vertices()) vs.push_back(add(v, t));
  return LatticePolytope::hull(p.dim(), vs);
}

LaurentPoly restriction(const std::vector<IVec>& coords, const std::vector<IVec>& ambient, const LaurentPoly& f,
                        const std::vector<std::string>& vars) {
  LaurentPoly r(vars);
  for (size_t i = 0; i < coords.size(); ++i) {
    const Q c = f.coeff(Exponent(ambient[i].begin(), ambient[i].end()));
    if (c != 0) r.add_term(Exponent(coords[i].begin(), coords[i].end()), c);
  }
  return r;
}

LaurentPoly summand_product(const std::vector<LatticePolytope>& summands, const std::vector<std::string>& vars) {
  LaurentPoly prod = LaurentPoly::constant(vars, Q(1));
  for (const auto& s : summands) prod = prod * an_polynomial(s, vars);
  return prod;
}

}  // namespace

std::optional<int> is_An_polygon(const LatticePolytope& q) {
  if (q.empty() || q.dim() != 2) return std::nullopt;
  const auto& vs = q.vertices();
  if (q.affine_dim() == 1) {
    if (gcd_vec(sub(vs[1], vs[0])) == 1) return 0;
    return std::nullopt;
  }
  if (q.affine_dim() != 2 || vs.size() != 3) return std::nullopt;
  std::vector<long long> len{gcd_vec(sub(vs[1], vs[0])), gcd_vec(sub(vs[2], vs[1])), gcd_vec(sub(vs[0], vs[2]))};
  std::sort(len.begin(), len.end());
  if (len[0] != 1 || len[1] != 1) return std::nullopt;
  if (normalized_volume(q) != to_z(len[2])) return std::nullopt;
  return static_cast<int>(len[2]);
}

LaurentPoly an_polynomial(const LatticePolytope& q, const std::vector<std::string>& vars) {
  const auto n = is_An_polygon(q);
  if (!n) fail("BadCertificate", "summand is not a polygon of type A_n");
  const auto& vs = q.vertices();
  LaurentPoly f(vars);
  auto put = [&](const IVec& x, const Q& c) { f.add_term(Exponent(x.begin(), x.end()), c); };
  if (*n == 0) {
    put(vs[0], 1);
    put(vs[1], 1);
    return f;
  }
  // Find the long edge (any edge when n = 1).
  for (size_t i = 0; i < 3; ++i) {
    const IVec& a = vs[i];
    const IVec& b = vs[(i + 1) % 3];
    const IVec& u = vs[(i + 2) % 3];
    const IVec d = sub(b, a);
    if (gcd_vec(d) != *n) continue;
    const IVec step = primitive(d);
    FactorialTable fact;
    put(u, 1);
    for (int k = 0; k <= *n; ++k) put(IVec{a[0] + k * step[0], a[1] + k * step[1]}, Q(fact.binomial(*n, k)));
    return f;
  }
  fail("Internal", "A_n polygon without a long edge");
}

std::vector<std::vector<LatticePolytope>> minkowski_decompositions(const LatticePolytope& q, int max_summands) {
  std::vector<std::vector<LatticePolytope>> out;
  std::vector<LatticePolytope> current;
  std::function<void(const LatticePolytope&, int, const std::vector<IVec>*)> visit =
      [&](const LatticePolytope& r, int remaining, const std::vector<IVec>* last_key) {
        if (r.affine_dim() == 0) {
          if (current.empty()) return;
          std::vector<LatticePolytope> dec = current;
          dec.back() = translate(dec.back(), r.vertices()[0]);
          if (admissible(q, dec)) out.push_back(dec);
          return;
        }
        if (remaining == 0) return;
        for (const auto& cand : summand_candidates(r)) {
          const auto key = shape_key(cand);
          if (last_key && key < *last_key) continue;
          auto rest = minkowski_difference(r, cand);
          if (!rest) continue;
          current.push_back(cand);
          visit(*rest, remaining - 1, &key);
          current.pop_back();
        }
      };
  visit(q, max_summands, nullptr);
  return out;
}

MinkowskiResult check_minkowski(const LaurentPoly& f, int max_summands) {
  MinkowskiResult res;
  if (f.is_zero() || f.nvars() != 3) {
    res.detail = "Minkowski check needs a nonzero polynomial in three variables";
    return res;
  }
  const LatticePolytope p = newton_polytope(f);
  if (!p.full_dimensional() || !p.origin_interior() || !is_reflexive(p)) {
    res.detail = "Newton polytope is not reflexive";
    return res;
  }
  const std::vector<std::string> uv{"u", "v"};
  MinkowskiCertificate cert;
  for (size_t k = 0; k < p.facets().size(); ++k) {
    const Facet& facet = p.facets()[k];
    std::vector<IVec> ambient;
    const auto coords = facet_lattice_coordinates(p, facet, &ambient);
    const LatticePolytope q = LatticePolytope::hull(2, coords);
    const LaurentPoly fq = restriction(coords, ambient, f, uv);
    bool found = false;
    for (const auto& dec : minkowski_decompositions(q, max_summands)) {
      if (summand_product(dec, uv) == fq) {
        FacetCertificate fc;
        fc.facet = facet;
        for (const auto& s : dec) fc.summands.push_back(s.vertices());
        cert.facets.push_back(std::move(fc));
        found = true;
        break;
      }
    }
    if (!found) {
      res.detail = "facet " + p.facet_string(facet) + ": no matching decomposition found (bounded search, at most " +
                   std::to_string(max_summands) + " summands)";
      return res;
    }
  }
  res.certificate = std::move(cert);
  return res;
}

LaurentPoly minkowski_polynomial(const LatticePolytope& p, const MinkowskiCertificate& cert) {
  if (p.dim() != 3 || !p.origin_interior() || !is_reflexive(p)) {
    fail("BadCertificate", "Minkowski polynomials need a reflexive 3-polytope");
  }
  const std::vector<std::string> uv{"u", "v"};
  std::map<IVec, Q> coeff;
  std::set<std::pair<IVec, long long>> covered;
  for (const auto& fc : cert.facets) {
    auto it = std::find_if(p.facets().begin(), p.facets().end(), [&](const Facet& f) {
      return f.normal == fc.facet.normal && f.offset == fc.facet.offset;
    });
    if (it == p.facets().end()) fail("BadCertificate", "certificate facet is not a facet of the polytope");
    covered.insert({it->normal, it->offset});
    std::vector<IVec> ambient;
    const auto coords = facet_lattice_coordinates(p, *it, &ambient);
    const LatticePolytope q = LatticePolytope::hull(2, coords);
    std::vector<LatticePolytope> summands;
    for (const auto& s : fc.summands) summands.push_back(LatticePolytope::hull(2, s));
    if (summands.empty()) fail("BadCertificate", "facet without summands");
    LatticePolytope sum = summands[0];
    for (size_t i = 1; i < summands.size(); ++i) sum = minkowski_sum(sum, summands[i]);
    if (!equals(sum, q)) fail("BadCertificate", "summands do not add up to the facet " + p.facet_string(*it));
    if (!admissible(q, summands)) fail("BadCertificate", "decomposition is not lattice admissible");
    const LaurentPoly prod = summand_product(summands, uv);
    std::map<IVec, IVec> to_ambient;
    for (size_t i = 0; i < coords.size(); ++i) to_ambient[coords[i]] = ambient[i];
    for (const auto& [e, c] : prod.terms()) {
      const IVec x = to_ambient.at(IVec(e.begin(), e.end()));
      auto [pos, inserted] = coeff.emplace(x, c);
      if (!inserted && pos->second != c) {
        fail("BadCertificate", "facet restrictions disagree on a shared edge");
      }
    }
  }
  if (covered.size() != p.facets().size()) fail("BadCertificate", "certificate does not cover every facet");
  LaurentPoly f(default_variable_names(3));
  for (const auto& [x, c] : coeff) f.add_term(Exponent(x.begin(), x.end()), c);
  return f;
}

}  // namespace tlg
