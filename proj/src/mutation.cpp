// SPDX-License-Identifier: Apache-2.0
#include "tlg/mutation.hpp"

#include <algorithm>
#include <functional>

#include "tlg/error.hpp"

namespace tlg {

namespace {

struct Inequality {
  QVec a;  // a . y >= b
  Q b;
};

// Solves the square system rows * y = rhs; false when singular.
bool solve(std::vector<QVec> rows, QVec rhs, QVec* out) {
  const size_t m = rows.size();
  for (size_t c = 0; c < m; ++c) {
    size_t piv = c;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) return false;
    std::swap(rows[piv], rows[c]);
    std::swap(rhs[piv], rhs[c]);
    for (size_t r = 0; r < m; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      const Q f = rows[r][c] / rows[c][c];
      for (size_t t = c; t < m; ++t) rows[r][t] -= f * rows[c][t];
      rhs[r] -= f * rhs[c];
    }
  }
  out->assign(m, Q(0));
  for (size_t c = 0; c < m; ++c) (*out)[c] = rhs[c] / rows[c][c];
  return true;
}

// Vertices of {y in Q^m : a.y >= b for all rows}, assumed bounded.
std::vector<QVec> enumerate_vertices(size_t m, const std::vector<Inequality>& ineqs) {
  std::vector<QVec> out;
  std::vector<size_t> pick;
  std::function<void(size_t)> visit = [&](size_t start) {
    if (pick.size() == m) {
      std::vector<QVec> rows;
      QVec rhs;
      for (size_t i : pick) {
        rows.push_back(ineqs[i].a);
        rhs.push_back(ineqs[i].b);
      }
      QVec y;
      if (!solve(rows, rhs, &y)) return;
      for (const auto& in : ineqs) {
        Q s = 0;
        for (size_t t = 0; t < m; ++t) s += in.a[t] * y[t];
        if (s < in.b) return;
      }
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
      return;
    }
    for (size_t i = start; i < ineqs.size(); ++i) {
      pick.push_back(i);
      visit(i + 1);
      pick.pop_back();
    }
  };
  visit(0);
  return out;
}

Z common_denominator(const std::vector<QVec>& pts) {
  Z d = 1;
  for (const auto& p : pts) {
    for (const auto& x : p) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  return d;
}

// Sorted hull vertices of rational points in Q^m.
std::vector<QVec> rational_hull(size_t m, const std::vector<QVec>& pts) {
  if (pts.empty()) return {};
  const Z d = common_denominator(pts);
  std::vector<IVec> scaled;
  for (const auto& p : pts) {
    IVec v;
    for (const auto& x : p) {
      const Q s = x * Q(d);
      if (!s.get_num().fits_slong_p()) fail("Overflow", "slice coordinates exceed 64-bit range");
      v.push_back(s.get_num().get_si());
    }
    scaled.push_back(v);
  }
  std::sort(scaled.begin(), scaled.end());
  scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
  std::vector<IVec> verts = scaled.size() == 1 ? scaled : LatticePolytope::hull(static_cast<int>(m), scaled).vertices();
  std::vector<QVec> out;
  for (const auto& v : verts) {
    QVec q;
    for (long long x : v) {
      Q c(to_z(x), d);
      c.canonicalize();
      q.push_back(c);
    }
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QVec> minkowski_vertices(size_t m, const std::vector<QVec>& a, const std::vector<QVec>& b) {
  std::vector<QVec> pts;
  for (const auto& x : a) {
    for (const auto& y : b) {
      QVec s(m);
      for (size_t t = 0; t < m; ++t) s[t] = x[t] + y[t];
      pts.push_back(s);
    }
  }
  return rational_hull(m, pts);
}

}  // namespace

LaurentPoly elementary_mutation(const LaurentPoly& f, const std::string& pivot, const LaurentPoly& factor,
                                const MutationRule& rule) {
  const int pv = f.var_index(pivot);
  if (pv < 0) fail("UnknownVariable", "pivot '" + pivot + "' is not a variable of f");
  if (factor.is_zero()) fail("BadSpec", "mutation factor must be nonzero");
  const LaurentPoly g = factor.embed(f.vars());
  for (const auto& [e, c] : g.terms()) {
    if (e[pv] != 0) fail("PivotInFactor", "mutation factor must not involve the pivot variable");
  }
  std::map<int, LaurentPoly> slices;
  for (const auto& [e, c] : f.terms()) {
    auto it = slices.try_emplace(e[pv], LaurentPoly(f.vars())).first;
    it->second.add_term(e, c);
  }
  std::map<int, int> power;
  int lowest = 0;
  for (const auto& [k, s] : slices) {
    const auto it = rule.slice_powers.find(k);
    power[k] = it != rule.slice_powers.end() ? it->second : rule.power * k;
    lowest = std::min(lowest, power[k]);
  }
  // Numerator over the common denominator factor^{-lowest}.
  LaurentPoly num(f.vars());
  for (const auto& [k, s] : slices) num = num + s * pow(g, static_cast<unsigned>(power[k] - lowest));
  if (lowest == 0) return num;
  LaurentPoly q;
  if (!laurent_divide(num, pow(g, static_cast<unsigned>(-lowest)), &q)) {
    fail("NotLaurent", "mutation does not produce a Laurent polynomial");
  }
  return q;
}

PolytopeMutation mutation_data_for(const LaurentPoly& f, const std::string& pivot, const LaurentPoly& factor) {
  const int pv = f.var_index(pivot);
  if (pv < 0) fail("UnknownVariable", "pivot '" + pivot + "' is not a variable of f");
  PolytopeMutation data;
  data.w.assign(f.nvars(), 0);
  data.w[pv] = -1;
  data.factor = newton_polytope(factor.embed(f.vars())).vertices();
  return data;
}

LatticePolytope polytope_mutation_effect(const LatticePolytope& p, const PolytopeMutation& data) {
  const size_t d = static_cast<size_t>(p.dim());
  if (!p.full_dimensional()) fail("NotFullDimensional", "polytope mutation needs a full-dimensional polytope");
  if (d < 2) fail("DimensionMismatch", "polytope mutation needs dimension at least 2");
  if (data.w.size() != d || gcd_vec(data.w) != 1) fail("BadSpec", "mutation vector must be primitive of dimension d");
  if (data.factor.empty()) fail("BadSpec", "factor polytope needs at least one vertex");
  IMat u, u_inv;
  unimodular_completion(data.w, &u, &u_inv);
  const size_t m = d - 1;
  // In coordinates x' = U^{-1} x the level <w, x> is x'_0.
  std::vector<QVec> factor;
  for (const auto& v : data.factor) {
    if (v.size() != d) fail("DimensionMismatch", "factor vertex has the wrong dimension");
    const IVec t = mat_vec(u_inv, v);
    if (t[0] != 0) fail("BadSpec", "factor polytope must lie in the hyperplane <w, x> = 0");
    QVec q;
    for (size_t c = 1; c < d; ++c) q.push_back(Q(to_z(t[c])));
    factor.push_back(q);
  }
  factor = rational_hull(m, factor);
  const LatticePolytope pp = apply_linear(u_inv, p);
  long long lo = pp.vertices().front()[0], hi = lo;
  for (const auto& v : pp.vertices()) {
    lo = std::min(lo, v[0]);
    hi = std::max(hi, v[0]);
  }
  std::vector<QVec> result;  // in x' coordinates
  for (long long h = lo; h <= hi; ++h) {
    std::vector<Inequality> slice_ineqs;
    for (const auto& f : pp.facets()) {
      Inequality in;
      for (size_t t = 1; t < d; ++t) in.a.push_back(Q(to_z(f.normal[t])));
      in.b = Q(to_z(f.offset)) - Q(to_z(f.normal[0])) * Q(to_z(h));
      slice_ineqs.push_back(in);
    }
    const auto slice = rational_hull(m, enumerate_vertices(m, slice_ineqs));
    if (slice.empty()) continue;
    std::vector<QVec> scaled_factor;
    const long long mult = h < 0 ? -h : h;
    for (const auto& q : factor) {
      QVec s;
      for (const auto& x : q) s.push_back(x * Q(to_z(mult)));
      scaled_factor.push_back(s);
    }
    std::vector<QVec> image;
    if (h >= 0) {
      image = minkowski_vertices(m, slice, scaled_factor);
    } else {
      std::vector<Inequality> diff = slice_ineqs;
      for (auto& in : diff) {
        Q low;
        bool first = true;
        for (const auto& q : scaled_factor) {
          Q s = 0;
          for (size_t t = 0; t < m; ++t) s += in.a[t] * q[t];
          if (first || s < low) low = s;
          first = false;
        }
        in.b -= low;
      }
      image = rational_hull(m, enumerate_vertices(m, diff));
      if (image.empty() || minkowski_vertices(m, image, scaled_factor) != slice) {
        fail("SliceNotDivisible", "slice at level " + std::to_string(h) + " is not divisible by the factor polytope");
      }
    }
    for (const auto& y : image) {
      QVec x{Q(to_z(h))};
      x.insert(x.end(), y.begin(), y.end());
      result.push_back(x);
    }
  }
  // Back to the original coordinates x = U x'.
  std::vector<IVec> pts;
  for (const auto& xp : result) {
    IVec x(d);
    for (size_t r = 0; r < d; ++r) {
      Q s = 0;
      for (size_t c = 0; c < d; ++c) s += Q(to_z(u[r][c])) * xp[c];
      x[r] = 0;
      if (s.get_den() != 1) {
        x.clear();
        break;
      }
      x[r] = s.get_num().get_si();
    }
    if (!x.empty()) pts.push_back(x);
  }
  const LatticePolytope out = LatticePolytope::hull(static_cast<int>(d), pts);
  // Every vertex of the mutated polytope must come from an integral point.
  std::vector<QVec> all;
  for (const auto& xp : result) {
    QVec x(d);
    for (size_t r = 0; r < d; ++r) {
      for (size_t c = 0; c < d; ++c) x[r] += Q(to_z(u[r][c])) * xp[c];
    }
    all.push_back(x);
  }
  std::vector<QVec> int_verts;
  for (const auto& v : out.vertices()) {
    QVec q;
    for (long long x : v) q.push_back(Q(to_z(x)));
    int_verts.push_back(q);
  }
  if (rational_hull(d, all) != int_verts) fail("NotIntegral", "mutated polytope has non-integral vertices");
  return out;
}

}  // namespace tlg
