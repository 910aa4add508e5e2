// SPDX-License-Identifier: Apache-2.0
// Small helpers for writing Laurent polynomials in tests.
#pragma once

#include <string>
#include <vector>

#include "tlg/laurent.hpp"
#include "tlg/series.hpp"

namespace tlg::test {

inline const std::vector<std::string>& xyz() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

inline LaurentPoly var(const std::vector<std::string>& vars, const std::string& name) {
  return LaurentPoly::variable(vars, name);
}

inline LaurentPoly cst(const std::vector<std::string>& vars, long c) { return LaurentPoly::constant(vars, Q(c)); }

inline LaurentPoly mono(const std::vector<std::string>& vars, Exponent e, long c = 1) {
  return LaurentPoly::monomial(vars, std::move(e), Q(c));
}

// x + y + z + 1/(xyz)
inline LaurentPoly p3_model() {
  const auto& v = xyz();
  return var(v, "x") + var(v, "y") + var(v, "z") + mono(v, {-1, -1, -1});
}

// (x+z+1)(x+y+z+1)(z+1)(y+z)/(xyz)
inline LaurentPoly v12_model() {
  const auto& v = xyz();
  const auto x = var(v, "x"), y = var(v, "y"), z = var(v, "z"), one = cst(v, 1);
  return (x + z + one) * (x + y + z + one) * (z + one) * (y + z) * mono(v, {-1, -1, -1});
}

// x + y + z + 1/x + 1/y + 1/z + xyz
inline LaurentPoly g25_model() {
  const auto& v = xyz();
  return var(v, "x") + var(v, "y") + var(v, "z") + mono(v, {-1, 0, 0}) + mono(v, {0, -1, 0}) + mono(v, {0, 0, -1}) +
         mono(v, {1, 1, 1});
}

inline PowerSeries series_of(std::vector<long> coeffs) {
  PowerSeries s;
  for (long c : coeffs) s.coeffs.emplace_back(c);
  return s;
}

}  // namespace tlg::test
