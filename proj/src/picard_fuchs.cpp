// SPDX-License-Identifier: Apache-2.0
#include "tlg/picard_fuchs.hpp"

#include <sstream>
#include <vector>

#include "tlg/error.hpp"

namespace tlg {

namespace {

Q power_of(long long base, int exponent) {
  Z r = 1;
  for (int e = 0; e < exponent; ++e) r *= to_z(base);
  return Q(r);
}

// (theta + c)^b as a polynomial in theta, low degree first.
std::vector<Z> shifted_theta_power(int c, int b) {
  std::vector<Z> p{Z(1)};
  for (int e = 0; e < b; ++e) {
    std::vector<Z> next(p.size() + 1, Z(0));
    for (size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i] * c;
      next[i + 1] += p[i];
    }
    p = next;
  }
  return p;
}

// Row-reduces `a` in place over Q (pivots with the smallest denominator) and
// returns the pivot row of each column, -1 for free columns.
std::vector<int> row_reduce(std::vector<std::vector<Q>>& a, size_t ncols) {
  std::vector<int> pivot_of_col(ncols, -1);
  size_t row = 0;
  for (size_t c = 0; c < ncols && row < a.size(); ++c) {
    size_t best = a.size();
    for (size_t r = row; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      if (best == a.size() || cmp(a[r][c].get_den(), a[best][c].get_den()) < 0) best = r;
    }
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    const Q inv = 1 / a[row][c];
    for (size_t t = c; t < ncols; ++t) a[row][t] *= inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Q f = a[r][c];
      for (size_t t = c; t < ncols; ++t) a[r][t] -= f * a[row][t];
    }
    pivot_of_col[c] = static_cast<int>(row);
    ++row;
  }
  return pivot_of_col;
}

// Kernel of the matrix as the reduced row echelon basis: distinct leading
// positions, ordered by leading position.
std::vector<std::vector<Q>> kernel_basis(std::vector<std::vector<Q>> a, size_t ncols) {
  const auto pivot_of_col = row_reduce(a, ncols);
  std::vector<std::vector<Q>> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Q> v(ncols, Q(0));
    v[free] = 1;
    for (size_t c = 0; c < ncols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<size_t>(pivot_of_col[c])][free];
    }
    basis.push_back(v);
  }
  row_reduce(basis, ncols);
  return basis;
}

}  // namespace

int DifferentialOperator::max_t_degree() const {
  int m = 0;
  for (const auto& [k, c] : coeffs) m = std::max(m, k.first);
  return m;
}

int DifferentialOperator::max_theta_order() const {
  int m = 0;
  for (const auto& [k, c] : coeffs) m = std::max(m, k.second);
  return m;
}

void DifferentialOperator::add(int t_degree, int theta_order, const Q& c) {
  if (t_degree < 0 || theta_order < 0) fail("BadOperator", "degrees must be nonnegative");
  const auto key = std::make_pair(t_degree, theta_order);
  Q v = coeffs.count(key) ? coeffs[key] + c : c;
  if (v == 0) {
    coeffs.erase(key);
  } else {
    coeffs[key] = v;
  }
}

DifferentialOperator DifferentialOperator::normalized() const {
  if (coeffs.empty()) fail("ZeroOperator", "the zero operator cannot be normalized");
  const Q lead = coeffs.begin()->second;
  DifferentialOperator out;
  for (const auto& [k, c] : coeffs) out.coeffs[k] = c / lead;
  return out;
}

std::string DifferentialOperator::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs) {
    const auto [i, j] = k;
    Q a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0) {
      os << "-";
      a = -a;
    }
    first = false;
    std::vector<std::string> parts;
    if (a != 1 || (i == 0 && j == 0)) parts.push_back(a.get_str());
    if (i > 0) parts.push_back(i == 1 ? "t" : "t^" + std::to_string(i));
    if (j > 0) parts.push_back(j == 1 ? "D" : "D^" + std::to_string(j));
    for (size_t p = 0; p < parts.size(); ++p) os << (p ? "*" : "") << parts[p];
  }
  return os.str();
}

DifferentialOperator compose(const DifferentialOperator& a, const DifferentialOperator& b) {
  DifferentialOperator out;
  for (const auto& [ka, ca] : a.coeffs) {
    for (const auto& [kb, cb] : b.coeffs) {
      // t^i theta^j t^c theta^d = t^{i+c} (theta + c)^j theta^d
      const auto poly = shifted_theta_power(kb.first, ka.second);
      for (size_t e = 0; e < poly.size(); ++e) {
        if (poly[e] == 0) continue;
        out.add(ka.first + kb.first, static_cast<int>(e) + kb.second, ca * cb * Q(poly[e]));
      }
    }
  }
  return out;
}

PowerSeries apply(const DifferentialOperator& op, const PowerSeries& s) {
  if (op.is_zero()) fail("ZeroOperator", "cannot apply the zero operator");
  PowerSeries out;
  out.coeffs.assign(s.order(), Q(0));
  for (size_t k = 0; k < s.order(); ++k) {
    for (const auto& [key, c] : op.coeffs) {
      const auto [i, j] = key;
      if (static_cast<size_t>(i) > k) continue;
      const size_t m = k - static_cast<size_t>(i);
      out.coeffs[k] += c * power_of(static_cast<long long>(m), j) * s.coeffs[m];
    }
  }
  return out;
}

std::optional<DifferentialOperator> fit(const PowerSeries& s, int max_order, int max_degree, const FitOptions& options) {
  if (max_order < 0 || max_degree < 0 || options.min_order < 0) fail("BadOrder", "search bounds must be nonnegative");
  bool any_candidate = false;
  const size_t total = s.order();
  for (int r = options.min_order; r <= max_order; ++r) {
    for (int d = 0; d <= max_degree; ++d) {
      const size_t unknowns = static_cast<size_t>((r + 1) * (d + 1));
      if (total < unknowns + static_cast<size_t>(r) + options.margin) continue;
      any_candidate = true;
      const size_t neq = total - options.margin;
      std::vector<std::vector<Q>> rows(neq, std::vector<Q>(unknowns, Q(0)));
      for (size_t k = 0; k < neq; ++k) {
        for (int i = 0; i <= d && static_cast<size_t>(i) <= k; ++i) {
          const size_t m = k - static_cast<size_t>(i);
          if (s.coeffs[m] == 0) continue;
          for (int j = 0; j <= r; ++j) {
            rows[k][static_cast<size_t>(i * (r + 1) + j)] = power_of(static_cast<long long>(m), j) * s.coeffs[m];
          }
        }
      }
      // First basis operator of exact theta order r.
      for (const auto& v : kernel_basis(rows, unknowns)) {
        DifferentialOperator op;
        for (int i = 0; i <= d; ++i) {
          for (int j = 0; j <= r; ++j) op.add(i, j, v[static_cast<size_t>(i * (r + 1) + j)]);
        }
        if (op.is_zero() || op.max_theta_order() != r) continue;
        op = op.normalized();
        const PowerSeries check = apply(op, s);
        bool kills = true;
        for (const auto& c : check.coeffs) kills = kills && c == 0;
        if (kills) return op;
        break;
      }
    }
  }
  if (!any_candidate) fail("InsufficientCoefficients", "series too short for every candidate operator size");
  return std::nullopt;
}

}  // namespace tlg
