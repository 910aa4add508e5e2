// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tlg/series.hpp"

namespace tlg {

// sum c[(i, j)] t^i theta^j with theta = t d/dt. Zero coefficients are not
// stored.
struct DifferentialOperator {
  std::map<std::pair<int, int>, Q> coeffs;  // (t degree, theta order) -> c

  int max_t_degree() const;
  int max_theta_order() const;
  bool is_zero() const { return coeffs.empty(); }
  void add(int t_degree, int theta_order, const Q& c);
  // Scales so the first nonzero coefficient in (i, j)-lex order is 1.
  DifferentialOperator normalized() const;
  std::string to_string() const;
  bool operator==(const DifferentialOperator& o) const { return coeffs == o.coeffs; }
};

// a * b as operators, using theta t^c = t^c (theta + c).
DifferentialOperator compose(const DifferentialOperator& a, const DifferentialOperator& b);

// Coefficient k of op(s) is sum c[i][j] (k-i)^j s[k-i], truncated at
// s.order(). ZeroOperator for the zero operator.
PowerSeries apply(const DifferentialOperator& op, const PowerSeries& s);

struct FitOptions {
  unsigned margin = 10;  // coefficients held back for verification
  int min_order = 0;     // smallest theta order searched
};

// Searches theta order r = min_order..max_order, then t degree
// 0..max_degree, for an operator of exact order r killing s through index
// order-1-margin: the first such element of the reduced echelon kernel basis
// (ordered by leading (i, j) position). It is returned normalized when it
// also kills the margin. Candidates needing more than
// order - margin - r equations are skipped; InsufficientCoefficients when
// none of them fits.
std::optional<DifferentialOperator> fit(const PowerSeries& s, int max_order, int max_degree,
                                        const FitOptions& options = {});

}  // namespace tlg
