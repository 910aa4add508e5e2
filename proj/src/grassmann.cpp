// SPDX-License-Identifier: Apache-2.0
#include "tlg/grassmann.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tlg/error.hpp"

namespace tlg {

namespace {

bool wide(int k, int n) { return k >= 10 || n >= 10; }

std::string cell_name(int k, int n, int i, int j) {
  if ((i == 0 && j == 1) || (i == k && j == n + 1)) return "a";
  if (wide(k, n)) return "a_" + std::to_string(i) + "_" + std::to_string(j);
  return "a" + std::to_string(i) + std::to_string(j);
}

int block_weight(const QuiverModel& q, const QuiverBlock& b, const QuiverVertex& v0) {
  // (k, n+1) carries the weight of (0, 1).
  const QuiverVertex v = (v0.i == q.k && v0.j == q.n + 1) ? QuiverVertex{0, 1} : v0;
  const bool origin = (v.i == 0 && v.j == 1);
  const int k = q.k, r = b.r, s = b.s;
  switch (b.kind) {
    case BlockKind::Horizontal:
      if (!origin && v.i > s) return 0;
      if (origin || v.i < r) return s - r;
      return s - v.i;
    case BlockKind::Mixed:
      if (v.i >= r && v.j <= s) return (k - v.i) + (s - v.j);
      if (v.i >= r) return k - v.i;
      if (v.j <= s) return (k - r) + (s - v.j);
      return k - r;
    case BlockKind::Vertical:
      if (origin || v.j < r) return s - r;
      if (v.j > s) return 0;
      return s - v.j;
  }
  return 0;
}

// Exponent vector of a coordinate over `vars` on the section (zero when the
// coordinate is fixed to 1).
Exponent section_exponent(const std::vector<std::string>& vars, const std::string& name) {
  Exponent e(vars.size(), 0);
  const auto it = std::find(vars.begin(), vars.end(), name);
  if (it != vars.end()) e[static_cast<size_t>(it - vars.begin())] = 1;
  return e;
}

LaurentPoly ratio(const std::vector<std::string>& vars, const std::string& head, const std::string& tail) {
  Exponent e = section_exponent(vars, head);
  const Exponent t = section_exponent(vars, tail);
  for (size_t i = 0; i < e.size(); ++i) e[i] -= t[i];
  return LaurentPoly::monomial(vars, e);
}

std::vector<std::vector<Q>> inverse_unitriangular(const std::vector<std::vector<long long>>& m) {
  const size_t l = m.size();
  std::vector<std::vector<Q>> inv(l, std::vector<Q>(l, Q(0)));
  for (size_t c = 0; c < l; ++c) {
    // Back substitution for column c of M^{-1}.
    for (size_t rr = l; rr-- > 0;) {
      Q v = (rr == c) ? Q(1) : Q(0);
      for (size_t t = rr + 1; t < l; ++t) v -= Q(to_z(m[rr][t])) * inv[t][c];
      inv[rr][c] = v / Q(to_z(m[rr][rr]));
    }
  }
  return inv;
}

}  // namespace

size_t QuiverModel::vertex_index(int i, int j) const {
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].i == i && vertices[v].j == j) return v;
  }
  fail("BadSpec", "no quiver vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

std::string QuiverModel::block_name(size_t p) const {
  const auto& b = blocks.at(p);
  const char* tag = b.kind == BlockKind::Horizontal ? "HB" : b.kind == BlockKind::Vertical ? "VB" : "MB";
  return std::string(tag) + "(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")";
}

QuiverModel consecutive_blocks(const GrassSpec& spec) {
  spec.validate();
  QuiverModel q;
  q.k = spec.k;
  q.n = spec.n;
  q.degrees = spec.degrees;
  const int k = spec.k, n = spec.n;
  q.vertices.push_back({0, 1});
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) q.vertices.push_back({i, j});
  }
  q.vertices.push_back({k, n + 1});
  q.arrows.push_back({'v', 0, 1, q.vertex_index(0, 1), q.vertex_index(1, 1)});
  for (int i = 1; i < k; ++i) {
    for (int j = 1; j <= n; ++j) q.arrows.push_back({'v', i, j, q.vertex_index(i, j), q.vertex_index(i + 1, j)});
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j < n; ++j) q.arrows.push_back({'h', i, j, q.vertex_index(i, j), q.vertex_index(i, j + 1)});
  }
  q.arrows.push_back({'h', k, n, q.vertex_index(k, n), q.vertex_index(k, n + 1)});

  int row = 0;  // rows [0,row) of vertical arrows are used
  int col = 1;  // columns [1,col) of horizontal arrows are used
  for (int d : spec.degrees) {
    QuiverBlock b;
    b.degree = d;
    if (row < k && row + d <= k) {
      b.kind = BlockKind::Horizontal;
      b.r = row;
      b.s = row + d;
      row += d;
    } else if (row < k) {
      b.kind = BlockKind::Mixed;
      b.r = row;
      b.s = 1 + d - (k - row);
      row = k;
      col = b.s;
    } else {
      b.kind = BlockKind::Vertical;
      b.r = col;
      b.s = col + d;
      col += d;
    }
    if (col > n) fail("BlocksDontFit", "degrees do not fit as consecutive blocks of the quiver");
    q.blocks.push_back(b);
  }
  std::vector<int> owner(q.arrows.size(), -1);
  for (size_t p = 0; p < q.blocks.size(); ++p) {
    auto& b = q.blocks[p];
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      const auto& ar = q.arrows[a];
      const bool vert_in = ar.kind == 'v' && ar.i >= (b.kind == BlockKind::Vertical ? k : b.r) &&
                           ar.i <= (b.kind == BlockKind::Horizontal ? b.s - 1 : k - 1);
      const bool horiz_in = ar.kind == 'h' && b.kind != BlockKind::Horizontal && ar.i <= k &&
                            ar.j >= (b.kind == BlockKind::Mixed ? 1 : b.r) && ar.j <= b.s - 1 &&
                            !(ar.i == k && ar.j == n);
      if (vert_in || horiz_in) {
        if (owner[a] >= 0) fail("Internal", "arrow assigned to two blocks");
        owner[a] = static_cast<int>(p);
        b.arrows.push_back(a);
      }
    }
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (owner[a] < 0) q.b0.push_back(a);
  }
  if (!q.blocks.empty() && owner[0] != 0) fail("Internal", "v_{0,1} must lie in the first block");
  return q;
}

WeightTable weight_table(const QuiverModel& q) {
  WeightTable w;
  const size_t kn_index = q.vertex_index(q.k, q.n);
  for (size_t p = 0; p < q.blocks.size(); ++p) {
    std::vector<int> row;
    for (const auto& v : q.vertices) row.push_back(block_weight(q, q.blocks[p], v));
    w.wt.push_back(row);
  }
  for (size_t p = 0; p < q.blocks.size(); ++p) {
    const auto& row = w.wt[p];
    const auto& mine = q.blocks[p].arrows;
    if (row[kn_index] != 0) fail("InvariantViolated", "weight at (k,n) must vanish");
    if (row.front() != row.back()) fail("InvariantViolated", "weights at (0,1) and (k,n+1) must agree");
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      const auto& ar = q.arrows[a];
      if (ar.kind == 'h' && ar.i == q.k && ar.j == q.n) continue;
      const int diff = row[ar.head] - row[ar.tail];
      const int want = std::find(mine.begin(), mine.end(), a) != mine.end() ? -1 : 0;
      if (row[ar.tail] < 0 || row[ar.head] < 0 || diff != want) {
        fail("InvariantViolated", "weight of block " + q.block_name(p) + " fails on an arrow");
      }
    }
  }
  return w;
}

std::vector<QuiverVertex> weight_vertices(const QuiverModel& q) {
  std::vector<QuiverVertex> out;
  for (const auto& b : q.blocks) {
    if (b.kind == BlockKind::Horizontal) {
      out.push_back(b.s == 1 ? QuiverVertex{0, 1} : QuiverVertex{b.s - 1, 1});
    } else {
      out.push_back({q.k, b.s - 1});
    }
  }
  return out;
}

std::string quiver_variable(const QuiverModel& q, const QuiverVertex& v) { return cell_name(q.k, q.n, v.i, v.j); }

std::vector<std::string> weight_variables(const QuiverModel& q) {
  std::vector<std::string> out;
  for (const auto& v : weight_vertices(q)) out.push_back(quiver_variable(q, v));
  return out;
}

std::vector<std::vector<long long>> weight_matrix(const QuiverModel& q, const WeightTable& w) {
  const auto wv = weight_vertices(q);
  std::vector<std::vector<long long>> m(wv.size(), std::vector<long long>(wv.size(), 0));
  for (size_t p = 0; p < wv.size(); ++p) {
    const size_t v = q.vertex_index(wv[p].i, wv[p].j);
    for (size_t t = 0; t < wv.size(); ++t) m[p][t] = w.wt[t][v];
  }
  return m;
}

std::vector<std::string> all_variables(const QuiverModel& q) {
  std::vector<std::string> out{"a"};
  for (int i = 1; i <= q.k; ++i) {
    for (int j = 1; j <= q.n; ++j) out.push_back(cell_name(q.k, q.n, i, j));
  }
  return out;
}

std::vector<std::string> surviving_variables(const QuiverModel& q) {
  auto fixed = weight_variables(q);
  fixed.push_back(cell_name(q.k, q.n, q.k, q.n));
  std::vector<std::string> out;
  for (const auto& v : all_variables(q)) {
    if (std::find(fixed.begin(), fixed.end(), v) == fixed.end()) out.push_back(v);
  }
  return out;
}

LaurentPoly block_sum_on_section(const QuiverModel& q, const std::vector<size_t>& arrows) {
  const auto vars = surviving_variables(q);
  LaurentPoly f(vars);
  for (size_t a : arrows) {
    const auto& ar = q.arrows[a];
    f = f + ratio(vars, quiver_variable(q, q.vertices[ar.head]), quiver_variable(q, q.vertices[ar.tail]));
  }
  return f;
}

LaurentPoly block_sum_full(const QuiverModel& q, const std::vector<size_t>& arrows) {
  const auto vars = all_variables(q);
  LaurentPoly f(vars);
  for (size_t a : arrows) {
    const auto& ar = q.arrows[a];
    f = f + ratio(vars, quiver_variable(q, q.vertices[ar.head]), quiver_variable(q, q.vertices[ar.tail]));
  }
  return f;
}

LaurentPoly bcfks_laurent(const GrassSpec& spec) {
  const QuiverModel q = consecutive_blocks(spec);
  weight_table(q);  // validates the weight invariants
  const auto vars = surviving_variables(q);
  std::vector<size_t> a_arrows;
  for (size_t a : q.b0) {
    const auto& ar = q.arrows[a];
    if (!(ar.kind == 'h' && ar.i == q.k && ar.j == q.n)) a_arrows.push_back(a);
  }
  LaurentPoly product = LaurentPoly::monomial(vars, section_exponent(vars, "a"));
  for (const auto& b : q.blocks) {
    product = product * pow(block_sum_on_section(q, b.arrows), static_cast<unsigned>(b.degree));
  }
  LaurentPoly f = block_sum_on_section(q, a_arrows) + product;
  if (f.nvars() != static_cast<size_t>(q.k * q.n) - q.blocks.size()) {
    fail("NotLaurent", "elimination left the wrong number of variables");
  }
  return f;
}

LaurentPoly closed_formula_laurent(const GrassSpec& spec) {
  spec.validate();
  const int k = spec.k, n = spec.n;
  const auto& d = spec.degrees;
  const size_t l = d.size();
  const int total = std::accumulate(d.begin(), d.end(), 0);

  // m: the largest index with d_1+...+d_m <= k; u_p as partial sums, shifted
  // by k-1 for the blocks after the m-th.
  size_t m = 0;
  std::vector<int> u(l + 1, 0);
  for (size_t p = 1; p <= l; ++p) {
    u[p] = u[p - 1] + d[p - 1];
    if (u[p] <= k) m = p;
  }
  const std::vector<int> partial = u;
  for (size_t p = m + 1; p <= l; ++p) u[p] = partial[p] - k + 1;
  if (total > k && u[l] > n) fail("BlocksDontFit", "degrees do not fit as consecutive blocks of the quiver");

  std::vector<std::string> fixed{cell_name(k, n, k, n)};
  for (size_t p = 1; p <= l; ++p) {
    if (p <= m) {
      fixed.push_back(u[p] == 1 ? std::string("a") : cell_name(k, n, u[p] - 1, 1));
    } else {
      fixed.push_back(cell_name(k, n, k, u[p] - 1));
    }
  }
  std::vector<std::string> vars;
  auto keep = [&](const std::string& s) {
    if (std::find(fixed.begin(), fixed.end(), s) == fixed.end()) vars.push_back(s);
  };
  keep("a");
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= n; ++j) keep(cell_name(k, n, i, j));
  }

  // sum_{i=lo}^{hi} sum_j a_{i,j}/a_{i-1,j}; row 1 has only the term a_{1,1}/a.
  auto vert = [&](int lo, int hi) {
    LaurentPoly s(vars);
    for (int i = std::max(lo, 1); i <= hi; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == 1 && j > 1) continue;
        s = s + ratio(vars, cell_name(k, n, i, j), cell_name(k, n, i - 1, j));
      }
    }
    return s;
  };
  // sum_{i=1}^{k} sum_{j=lo}^{hi} a_{i,j}/a_{i,j-1}.
  auto horiz = [&](int lo, int hi) {
    LaurentPoly s(vars);
    for (int i = 1; i <= k; ++i) {
      for (int j = std::max(lo, 2); j <= hi; ++j) s = s + ratio(vars, cell_name(k, n, i, j), cell_name(k, n, i, j - 1));
    }
    return s;
  };
  auto power = [&](const LaurentPoly& base, size_t p) { return pow(base, static_cast<unsigned>(d[p - 1])); };
  const LaurentPoly a = LaurentPoly::monomial(vars, section_exponent(vars, "a"));

  if (total <= k) {
    LaurentPoly f = vert(u[l] + 1, k) + horiz(2, n);
    LaurentPoly prod = a;
    for (size_t p = 1; p <= l; ++p) prod = prod * power(p == 1 ? vert(1, d[0]) : vert(u[p - 1] + 1, u[p]), p);
    return f + prod;
  }
  if (m == 0) {
    LaurentPoly prod = a * power(vert(1, k) + horiz(2, u[1]), 1);
    for (size_t p = 2; p <= l; ++p) prod = prod * power(horiz(u[p - 1] + 1, u[p]), p);
    return horiz(u[l] + 1, n) + prod;
  }
  LaurentPoly prod = a * power(vert(1, d[0]), 1);
  for (size_t p = 2; p <= m; ++p) prod = prod * power(vert(u[p - 1] + 1, u[p]), p);
  prod = prod * power(vert(u[m] + 1, k) + horiz(2, u[m + 1]), m + 1);
  for (size_t p = m + 2; p <= l; ++p) prod = prod * power(horiz(u[p - 1] + 1, u[p]), p);
  return horiz(u[l] + 1, n) + prod;
}

Substitution elimination_image(const QuiverModel& q, const WeightTable& w) {
  const auto target = surviving_variables(q);
  std::vector<LaurentPoly> fbar;
  for (const auto& b : q.blocks) fbar.push_back(block_sum_on_section(q, b.arrows));
  Substitution out;
  for (size_t v = 0; v + 1 < q.vertices.size(); ++v) {
    const std::string name = quiver_variable(q, q.vertices[v]);
    LaurentPoly img = LaurentPoly::monomial(target, section_exponent(target, name));
    for (size_t p = 0; p < fbar.size(); ++p) {
      img = img * pow(fbar[p], static_cast<unsigned>(w.wt[p][v]));
    }
    out[name] = RationalExpr(img);
  }
  return out;
}

std::string explain_model(const GrassSpec& spec) {
  const QuiverModel q = consecutive_blocks(spec);
  const WeightTable w = weight_table(q);
  const auto wv = weight_vertices(q);
  const auto names = weight_variables(q);
  std::ostringstream os;
  os << "G(" << q.k << "," << q.n + q.k << ") with degrees";
  for (int d : q.degrees) os << " " << d;
  os << "\n\nblocks:\n";
  for (size_t p = 0; p < q.blocks.size(); ++p) {
    os << "  B" << p + 1 << " = " << q.block_name(p) << "  degree " << q.blocks[p].degree << "  weight vertex ("
       << wv[p].i << "," << wv[p].j << ")  variable " << names[p] << "\n";
  }
  os << "  B0 has " << q.b0.size() << " arrows\n\nweights wt_p(i,j):\n";
  for (size_t p = 0; p < q.blocks.size(); ++p) {
    os << "  p=" << p + 1 << ":  (0,1):" << w.wt[p].front() << "\n";
    for (int i = 1; i <= q.k; ++i) {
      os << "        ";
      for (int j = 1; j <= q.n; ++j) os << " " << w.wt[p][q.vertex_index(i, j)];
      os << "\n";
    }
  }
  const auto m = weight_matrix(q, w);
  const auto inv = inverse_unitriangular(m);
  os << "\nM:\n";
  for (const auto& row : m) {
    os << " ";
    for (long long x : row) os << " " << x;
    os << "\n";
  }
  os << "\nM^-1:\n";
  for (const auto& row : inv) {
    os << " ";
    for (const Q& x : row) os << " " << x.get_str();
    os << "\n";
  }
  os << "\nsurviving variables:";
  for (const auto& v : surviving_variables(q)) os << " " << v;
  os << "\n";
  return os.str();
}

}  // namespace tlg
