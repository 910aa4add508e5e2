// SPDX-License-Identifier: Apache-2.0
#include "tlg/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tlg/error.hpp"

namespace tlg {

namespace {

std::vector<int> period_coords(const LaurentPoly& f, const std::vector<std::string>& period_vars) {
  std::vector<int> coords;
  if (period_vars.empty()) {
    coords.resize(f.nvars());
    std::iota(coords.begin(), coords.end(), 0);
    return coords;
  }
  for (const auto& v : period_vars) {
    const int i = f.var_index(v);
    if (i < 0) fail("UnknownVariable", "period variable '" + v + "' not in the polynomial");
    coords.push_back(i);
  }
  return coords;
}

}  // namespace

std::vector<LaurentPoly> phi_with_parameters(const LaurentPoly& f, unsigned order,
                                             const std::vector<std::string>& period_vars,
                                             const KernelOptions& options) {
  if (order < 1) fail("BadOrder", "series order must be at least 1");
  return constant_term_sequence(f, order, period_coords(f, period_vars), options);
}

PowerSeries phi(const LaurentPoly& f, unsigned order, const std::vector<std::string>& period_vars,
                const KernelOptions& options) {
  const auto terms = phi_with_parameters(f, order, period_vars, options);
  PowerSeries s;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (!terms[i].is_constant()) {
      fail("NonScalarConstantTerm", "constant term of f^" + std::to_string(i) +
                                        " depends on variables outside the period variables");
    }
    s.coeffs.push_back(terms[i].constant_coeff());
  }
  return s;
}

int WciSpec::index() const {
  return std::accumulate(weights.begin(), weights.end(), 0) - std::accumulate(degrees.begin(), degrees.end(), 0);
}

void WciSpec::validate() const {
  if (weights.empty()) fail("BadSpec", "at least one weight is required");
  for (int w : weights) {
    if (w <= 0) fail("BadSpec", "weights must be positive");
  }
  for (int d : degrees) {
    if (d <= 0) fail("BadSpec", "degrees must be positive");
  }
  if (index() < 1) fail("NotFano", "sum of weights minus sum of degrees must be at least 1");
}

PowerSeries iseries_wci(const WciSpec& spec, unsigned order) {
  spec.validate();
  const int d0 = spec.index();
  PowerSeries s;
  s.coeffs.assign(order, Q(0));
  FactorialTable fact;
  for (unsigned d = 0; static_cast<unsigned long>(d0) * d < order; ++d) {
    Z num = fact.factorial(static_cast<unsigned long>(d0) * d);
    for (int di : spec.degrees) num *= fact.factorial(static_cast<unsigned long>(di) * d);
    Z den = 1;
    for (int w : spec.weights) den *= fact.factorial(static_cast<unsigned long>(w) * d);
    Q c(num, den);
    c.canonicalize();
    s.coeffs[static_cast<size_t>(d0) * d] = c;
  }
  return s;
}

ToricISeries iseries_toric(const ToricCurveData& data, unsigned order) {
  const size_t rho = data.rows.size();
  if (data.kappa.size() != rho) fail("BadSpec", "kappa must have one entry per generator row");
  if (!data.hyper.empty() && data.hyper.size() != rho) fail("BadSpec", "hypersurface degrees need one row per generator");
  if (!data.params.empty() && data.param_exponents.size() != rho) {
    fail("BadSpec", "parameter exponents need one row per generator");
  }
  const size_t nhyper = data.hyper.empty() ? 0 : data.hyper[0].size();
  std::vector<long long> degree(rho);
  long long g = 0;
  for (size_t s = 0; s < rho; ++s) {
    long long y = data.kappa[s];
    for (size_t i = 0; i < nhyper; ++i) y -= data.hyper[s][i];
    if (data.kappa[s] <= 0 || y <= 0) {
      fail("NegativeAnticanonicalDegree", "generator " + std::to_string(s) + " has non-positive anticanonical degree");
    }
    degree[s] = y;
    g = std::gcd(g, y);
  }
  ToricISeries out;
  out.index_one_limitation = (g == 1);
  out.series.coeffs.assign(order, Q(0));
  if (order == 0) return out;
  const size_t ndiv = rho ? data.rows[0].size() : 0;
  if (!data.params.empty()) out.with_params.assign(order, LaurentPoly(data.params));

  FactorialTable fact;
  std::vector<long long> m(rho, 0);
  std::function<void(size_t, long long)> visit = [&](size_t s, long long t_deg) {
    if (s == rho) {
      Q c(1);
      for (size_t j = 0; j < ndiv; ++j) {
        long long bd = 0;
        for (size_t r = 0; r < rho; ++r) bd += m[r] * data.rows[r][j];
        const Z& f = fact.factorial(static_cast<unsigned long>(bd < 0 ? -bd : bd));
        if (bd >= 0) {
          c /= f;
        } else {
          c *= f;
        }
      }
      c *= fact.factorial(static_cast<unsigned long>(t_deg));
      for (size_t i = 0; i < nhyper; ++i) {
        long long by = 0;
        for (size_t r = 0; r < rho; ++r) by += m[r] * data.hyper[r][i];
        c *= fact.factorial(static_cast<unsigned long>(by < 0 ? -by : by));
      }
      out.series.coeffs[static_cast<size_t>(t_deg)] += c;
      if (!data.params.empty()) {
        Exponent e(data.params.size(), 0);
        for (size_t r = 0; r < rho; ++r) {
          for (size_t p = 0; p < e.size(); ++p) e[p] += static_cast<int>(m[r] * data.param_exponents[r][p]);
        }
        out.with_params[static_cast<size_t>(t_deg)].add_term(e, c);
      }
      return;
    }
    for (m[s] = 0; t_deg + m[s] * degree[s] < static_cast<long long>(order); ++m[s]) {
      visit(s + 1, t_deg + m[s] * degree[s]);
    }
    m[s] = 0;
  };
  visit(0, 0);
  return out;
}

int GrassSpec::index() const { return k + n - std::accumulate(degrees.begin(), degrees.end(), 0); }

void GrassSpec::validate() const {
  if (k < 1 || n < 1) fail("BadSpec", "k and n must be positive");
  for (int d : degrees) {
    if (d <= 0) fail("BadSpec", "degrees must be positive");
  }
  if (index() < 1) fail("NotFano", "sum of degrees must be less than n + k");
}

PowerSeries iseries_grassmannian(const GrassSpec& spec, unsigned order) {
  spec.validate();
  const int d0 = spec.index();
  const int k = spec.k, n = spec.n;
  PowerSeries out;
  out.coeffs.assign(order, Q(0));
  FactorialTable fact;
  for (unsigned d = 0; static_cast<unsigned long>(d0) * d < order; ++d) {
    // s[i][j] for i in [1,k], j in [1,n]; last row and column are fixed at d.
    std::vector<std::vector<long>> s(k + 1, std::vector<long>(n + 1, static_cast<long>(d)));
    std::vector<std::pair<int, int>> cells;
    for (int i = k - 1; i >= 1; --i) {
      for (int j = n - 1; j >= 1; --j) cells.emplace_back(i, j);
    }
    Z total = 0;
    std::function<void(size_t, const Z&)> visit = [&](size_t c, const Z& acc) {
      if (c == cells.size()) {
        total += acc;
        return;
      }
      const auto [i, j] = cells[c];
      const long hi = std::min(s[i + 1][j], s[i][j + 1]);
      for (long v = 0; v <= hi; ++v) {
        s[i][j] = v;
        visit(c + 1, acc * fact.binomial(s[i + 1][j], v) * fact.binomial(s[i][j + 1], v));
      }
      s[i][j] = static_cast<long>(d);
    };
    visit(0, Z(1));
    Z num = fact.factorial(static_cast<unsigned long>(d0) * d);
    for (int di : spec.degrees) num *= fact.factorial(static_cast<unsigned long>(di) * d);
    Z den = 1;
    for (int r = 0; r < k + n; ++r) den *= fact.factorial(d);
    Q c(num * total, den);
    c.canonicalize();
    out.coeffs[static_cast<size_t>(d0) * d] = c;
  }
  return out;
}

PeriodReport compare_series(const PowerSeries& got, const PowerSeries& target) {
  PeriodReport r;
  const size_t n = std::min(got.order(), target.order());
  r.compared = static_cast<unsigned>(n);
  for (size_t i = 0; i < n; ++i) {
    if (got.coeffs[i] != target.coeffs[i]) {
      r.first_mismatch = static_cast<unsigned>(i);
      r.got = got.coeffs[i];
      r.expected = target.coeffs[i];
      return r;
    }
  }
  r.match = true;
  return r;
}

PeriodReport verify_period(const LaurentPoly& f, const PowerSeries& target,
                           const std::vector<std::string>& period_vars, const KernelOptions& options) {
  if (target.order() < 2) fail("BadOrder", "period verification needs a target of order at least 2");
  return compare_series(phi(f, static_cast<unsigned>(target.order()), period_vars, options), target);
}

}  // namespace tlg
