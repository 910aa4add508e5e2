// SPDX-License-Identifier: Apache-2.0
#include "tlg/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "tlg/error.hpp"

namespace tlg {

namespace {

ZMat identity(size_t n) {
  ZMat m(n, std::vector<Z>(n, Z(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat to_zmat(const IMat& a) {
  ZMat m;
  for (const auto& row : a) {
    std::vector<Z> r;
    for (long long x : row) r.push_back(to_z(x));
    m.push_back(r);
  }
  return m;
}

IMat cartan(size_t n, const std::vector<std::pair<size_t, size_t>>& edges) {
  IMat g(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) g[i][i] = 2;
  for (const auto& [a, b] : edges) g[a][b] = g[b][a] = -1;
  return g;
}

std::vector<std::pair<size_t, size_t>> chain(size_t n) {
  std::vector<std::pair<size_t, size_t>> e;
  for (size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

int parse_index(const std::string& s, const std::string& name) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    fail("BadName", "cannot parse lattice name '" + name + "'");
  }
  return std::stoi(s);
}

std::vector<QVec> rational_rows(const GramLattice& l) {
  std::vector<QVec> a;
  for (const auto& row : l.gram) {
    QVec r;
    for (long long x : row) r.push_back(Q(to_z(x)));
    a.push_back(r);
  }
  return a;
}

}  // namespace

bool GramLattice::is_even() const {
  for (size_t i = 0; i < gram.size(); ++i) {
    if (gram[i][i] % 2 != 0) return false;
  }
  return true;
}

GramLattice twisted(const GramLattice& a, int twist) {
  if (twist != 1 && twist != -1) fail("BadName", "twist must be 1 or -1");
  GramLattice out = a;
  for (auto& row : out.gram) {
    for (auto& x : row) x *= twist;
  }
  return out;
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const size_t n = a.rank(), m = b.rank();
  GramLattice out;
  out.gram.assign(n + m, IVec(n + m, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out.gram[i][j] = a.gram[i][j];
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) out.gram[n + i][n + j] = b.gram[i][j];
  }
  return out;
}

GramLattice standard_lattice(const std::string& name, int twist) {
  GramLattice l;
  if (name == "H") {
    l.gram = {{0, 1}, {1, 0}};
  } else if (name == "M" || name.rfind("M_", 0) == 0) {
    const GramLattice e8 = standard_lattice("E8", -1);
    l = direct_sum(direct_sum(standard_lattice("H"), e8), e8);
    if (name != "M") {
      const int n = parse_index(name.substr(2), name);
      if (n < 1) fail("BadName", "M_n needs n >= 1");
      l = direct_sum(l, GramLattice{{{-2LL * n}}});
    }
  } else if (name.size() >= 3 && name.front() == '<' && name.back() == '>') {
    const std::string body = name.substr(1, name.size() - 2);
    const bool neg = body[0] == '-';
    const int m = parse_index(neg ? body.substr(1) : body, name);
    if (m == 0) fail("BadName", "rank-one lattice needs a nonzero value");
    l.gram = {{neg ? -m : m}};
  } else if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'D' || name[0] == 'E')) {
    const size_t n = static_cast<size_t>(parse_index(name.substr(1), name));
    if (name[0] == 'A') {
      if (n < 1) fail("BadName", "A_n needs n >= 1");
      l.gram = cartan(n, chain(n));
    } else if (name[0] == 'D') {
      if (n < 4) fail("BadName", "D_n needs n >= 4");
      auto e = chain(n - 1);
      e.emplace_back(n - 3, n - 1);
      l.gram = cartan(n, e);
    } else {
      if (n < 6 || n > 8) fail("BadName", "E_n exists for n = 6, 7, 8");
      // Chain of n-1 nodes with the branch node attached to the third.
      auto e = chain(n - 1);
      e.emplace_back(2, n - 1);
      l.gram = cartan(n, e);
    }
  } else {
    fail("BadName", "unknown lattice name '" + name + "'");
  }
  return twisted(l, twist);
}

SmithForm smith_normal_form(const ZMat& input) {
  ZMat a = input;
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  SmithForm out;
  out.u = identity(rows);
  out.v = identity(cols);
  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(out.u[i], out.u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : out.v) std::swap(r[i], r[j]);
  };
  // row_i += c * row_j
  auto add_row = [&](size_t i, size_t j, const Z& c) {
    for (size_t t = 0; t < cols; ++t) a[i][t] += c * a[j][t];
    for (size_t t = 0; t < rows; ++t) out.u[i][t] += c * out.u[j][t];
  };
  auto add_col = [&](size_t i, size_t j, const Z& c) {
    for (size_t t = 0; t < rows; ++t) a[t][i] += c * a[t][j];
    for (size_t t = 0; t < cols; ++t) out.v[t][i] += c * out.v[t][j];
  };
  const size_t r = std::min(rows, cols);
  for (size_t t = 0; t < r; ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      size_t bi = rows, bj = cols;
      for (size_t i = t; i < rows; ++i) {
        for (size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == rows) break;
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Z q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row.
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i) {
        for (size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, Z(1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a[t][t] < 0) {
      for (size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (size_t j = 0; j < rows; ++j) out.u[t][j] = -out.u[t][j];
    }
  }
  for (size_t t = 0; t < r; ++t) out.diagonal.push_back(a[t][t]);
  return out;
}

Z lattice_determinant(const GramLattice& l) { return determinant(l.gram); }

Q mod2(const Q& x) {
  Q y = x / 2;
  Z f;
  mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  Q r = x - Q(2 * f);
  r.canonicalize();
  return r;
}

DiscriminantData discriminant(const GramLattice& l) {
  const size_t n = l.rank();
  if (n == 0 || lattice_determinant(l) == 0) fail("DegenerateLattice", "discriminant needs a nondegenerate lattice");
  const SmithForm s = smith_normal_form(to_zmat(l.gram));
  DiscriminantData out;
  for (size_t i = 0; i < n; ++i) {
    const Z& d = s.diagonal[i];
    if (d == 1) continue;
    // Column i of V divided by d_i generates the i-th cyclic factor.
    QVec g(n);
    for (size_t t = 0; t < n; ++t) {
      g[t] = Q(s.v[t][i], d);
      g[t].canonicalize();
    }
    Q q = 0;
    for (size_t a = 0; a < n; ++a) {
      for (size_t b = 0; b < n; ++b) q += g[a] * Q(to_z(l.gram[a][b])) * g[b];
    }
    out.group.push_back(d);
    out.generators.push_back(g);
    out.form_values.push_back(mod2(q));
  }
  return out;
}

bool cyclic_form_attains(const Q& q_generator, const Z& order, const Q& value) {
  const Q target = mod2(value);
  for (Z u = 1; u < order || (order == 1 && u == 1); ++u) {
    if (gcd(u, order) != 1) continue;
    if (mod2(q_generator * Q(u * u)) == target) return true;
  }
  return false;
}

Z index_check(const GramLattice& sub, const GramLattice& sup, const IMat& embedding) {
  const size_t m = sub.rank(), n = sup.rank();
  if (embedding.size() != m) fail("DimensionMismatch", "embedding needs one row per basis vector of sub");
  for (const auto& row : embedding) {
    if (row.size() != n) fail("DimensionMismatch", "embedding rows must have the rank of sup");
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      Z s = 0;
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) s += to_z(embedding[i][a]) * to_z(sup.gram[a][b]) * to_z(embedding[j][b]);
      }
      if (s != to_z(sub.gram[i][j])) fail("NotIsometric", "embedding does not preserve the form");
    }
  }
  if (m != n) fail("NotFiniteIndex", "sublattice must have full rank");
  Z idx = abs(determinant(embedding));
  if (idx == 0) fail("NotFiniteIndex", "sublattice must have full rank");
  const Z ds = lattice_determinant(sub), dl = lattice_determinant(sup);
  if (dl == 0 || ds != idx * idx * dl) fail("Internal", "index identity [M:L]^2 = d(L)/d(M) fails");
  return idx;
}

std::pair<int, int> signature(const GramLattice& l) {
  const size_t n = l.rank();
  if (n == 0 || lattice_determinant(l) == 0) fail("DegenerateLattice", "signature needs a nondegenerate lattice");
  std::vector<QVec> a = rational_rows(l);
  int pos = 0, neg = 0;
  // Symmetric Gaussian elimination by congruence.
  for (size_t t = 0; t < n; ++t) {
    size_t p = t;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // No diagonal pivot: a[t][j] != 0 for some j; replace e_t by e_t + e_j.
      size_t j = t + 1;
      while (j < n && a[t][j] == 0) ++j;
      if (j == n) fail("DegenerateLattice", "signature needs a nondegenerate lattice");
      for (size_t c = 0; c < n; ++c) a[t][c] += a[j][c];
      for (size_t r = 0; r < n; ++r) a[r][t] += a[r][j];
      p = t;
    }
    if (p != t) {
      std::swap(a[p], a[t]);
      for (auto& row : a) std::swap(row[p], row[t]);
    }
    const Q piv = a[t][t];
    (piv > 0 ? pos : neg) += 1;
    const QVec pivot_row = a[t];
    for (size_t r = t + 1; r < n; ++r) {
      for (size_t c = t + 1; c < n; ++c) a[r][c] -= pivot_row[r] * pivot_row[c] / piv;
      a[r][t] = a[t][r] = 0;
    }
  }
  return {pos, neg};
}

GramLattice orthogonal_complement(const GramLattice& sup, const IMat& embedding, IMat* basis) {
  const size_t n = sup.rank();
  ZMat a;
  for (const auto& row : embedding) {
    if (row.size() != n) fail("DimensionMismatch", "embedding rows must have the rank of sup");
    std::vector<Z> r(n, Z(0));
    for (size_t b = 0; b < n; ++b) {
      for (size_t c = 0; c < n; ++c) r[b] += to_z(row[c]) * to_z(sup.gram[c][b]);
    }
    a.push_back(r);
  }
  const SmithForm s = smith_normal_form(a);
  size_t rank = 0;
  for (const auto& d : s.diagonal) rank += (d != 0);
  // Columns of V past the rank span the saturated kernel of a.
  IMat ker;
  for (size_t c = rank; c < n; ++c) {
    IVec v;
    for (size_t t = 0; t < n; ++t) {
      if (!s.v[t][c].fits_slong_p()) fail("Overflow", "complement basis exceeds 64-bit range");
      v.push_back(s.v[t][c].get_si());
    }
    ker.push_back(v);
  }
  GramLattice out;
  out.gram.assign(ker.size(), IVec(ker.size(), 0));
  for (size_t i = 0; i < ker.size(); ++i) {
    for (size_t j = 0; j < ker.size(); ++j) {
      long long x = 0;
      for (size_t b = 0; b < n; ++b) {
        for (size_t c = 0; c < n; ++c) x += ker[i][b] * sup.gram[b][c] * ker[j][c];
      }
      out.gram[i][j] = x;
    }
  }
  if (basis) *basis = ker;
  return out;
}

Q duval_intersection(const DuValPoint& sing, int k, int r) {
  if (sing.type == 'D') {
    if (sing.n < 4) fail("BadRange", "D_n needs n >= 4");
    return Q(1, 2);
  }
  if (sing.type != 'A') fail("BadRange", "transversal smooth curves meet only at A_n or D_n points");
  const int n = sing.n;
  if (n < 1 || k < 1 || k > n || r < 1 || r > n) fail("BadRange", "need 1 <= k, r <= n");
  Q out = r <= k ? Q(r * (n + 1 - k), n + 1) : Q(k * (n + 1 - r), n + 1);
  out.canonicalize();
  return out;
}

Q duval_self_intersection(const DuValPoint& sing, int k, bool second_branch) {
  switch (sing.type) {
    case 'A': {
      const int n = sing.n;
      if (n < 1 || k < 1 || k > n) fail("BadRange", "need 1 <= k <= n");
      Q out(k * (n + 1 - k), n + 1);
      out.canonicalize();
      return out;
    }
    case 'D': {
      if (sing.n < 4) fail("BadRange", "D_n needs n >= 4");
      Q out = second_branch ? Q(sing.n, 4) : Q(1);
      out.canonicalize();
      return out;
    }
    case 'E':
      if (sing.n == 6) return Q(4, 3);
      if (sing.n == 7) return Q(3, 2);
      fail("BadRange", "a curve smooth at the point excludes E_8");
    default:
      fail("BadRange", "unknown du Val type");
  }
}

}  // namespace tlg
