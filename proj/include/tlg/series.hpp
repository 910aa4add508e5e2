// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlg/kernels.hpp"
#include "tlg/laurent.hpp"
#include "tlg/rational.hpp"

namespace tlg {

// Truncated series sum_{i < order} coeffs[i] t^i.
struct PowerSeries {
  std::vector<Q> coeffs;
  size_t order() const { return coeffs.size(); }
  bool operator==(const PowerSeries& o) const { return coeffs == o.coeffs; }
  bool operator!=(const PowerSeries& o) const { return coeffs != o.coeffs; }
};

// Phi_f through t^{order-1}: coeffs[i] = [f^i]_0 over period_vars (all
// variables when empty). Errors with NonScalarConstantTerm when a variable
// outside period_vars survives in some constant term.
PowerSeries phi(const LaurentPoly& f, unsigned order, const std::vector<std::string>& period_vars = {},
                const KernelOptions& options = {});

// Same as phi but keeps the variables outside period_vars as parameters:
// element i is [f^i]_0 as a polynomial in those variables.
std::vector<LaurentPoly> phi_with_parameters(const LaurentPoly& f, unsigned order,
                                             const std::vector<std::string>& period_vars,
                                             const KernelOptions& options = {});

struct WciSpec {
  std::vector<int> weights;
  std::vector<int> degrees;
  int index() const;  // d0 = sum(weights) - sum(degrees)
  void validate() const;
};

// Regularized I-series of a weighted complete intersection in the
// anticanonical direction: coefficient of t^{d0 d} is
// (d0 d)! prod (d_i d)! / prod (w_j d)!.
PowerSeries iseries_wci(const WciSpec& spec, unsigned order);

struct ToricCurveData {
  // rows[s][j] = beta_s . D_j for the generating classes beta_s.
  std::vector<std::vector<long long>> rows;
  // kappa[s] = beta_s . (-K_X) = sum_j rows[s][j].
  std::vector<long long> kappa;
  // Optional hypersurface degrees: hyper[s][i] = beta_s . Y_i.
  std::vector<std::vector<long long>> hyper;
  // Optional parameter monomials: each class beta_s contributes
  // prod_p params[p]^{param_exponents[s][p]}.
  std::vector<std::string> params;
  std::vector<std::vector<int>> param_exponents;
};

struct ToricISeries {
  PowerSeries series;                      // parameters set to 1
  std::vector<LaurentPoly> with_params;    // per power of t, over params (empty when none)
  // True when the anticanonical degrees of the generators have gcd 1; the
  // exp(mu) correction term is not applied in that case.
  bool index_one_limitation = false;
};

// Sum over effective classes beta = sum m_s beta_s with the anticanonical
// degree below `order` of t^{beta.(-K_Y)} prod_i |beta.Y_i|! / prod_j
// |beta.D_j|!^{sign(beta.D_j)}, Y_0 = -K_Y.
ToricISeries iseries_toric(const ToricCurveData& data, unsigned order);

struct GrassSpec {
  int k = 0;
  int n = 0;
  std::vector<int> degrees;
  int index() const;  // d0 = k + n - sum(degrees)
  void validate() const;
};

// Regularized I-series of a complete intersection in G(k, n+k).
PowerSeries iseries_grassmannian(const GrassSpec& spec, unsigned order);

struct PeriodReport {
  bool match = false;
  unsigned compared = 0;                  // number of coefficients compared
  std::optional<unsigned> first_mismatch;  // index of the first difference
  Q got, expected;                         // values at the first mismatch
};

PeriodReport verify_period(const LaurentPoly& f, const PowerSeries& target,
                           const std::vector<std::string>& period_vars = {},
                           const KernelOptions& options = {});
PeriodReport compare_series(const PowerSeries& got, const PowerSeries& target);

}  // namespace tlg
