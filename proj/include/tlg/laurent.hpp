// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tlg/rational.hpp"

namespace tlg {

using Exponent = std::vector<int>;

// Exact Laurent polynomial in named variables. Terms live in a map ordered
// lexicographically by exponent so iteration (and therefore every printed
// result) is deterministic. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Q>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars);

  static LaurentPoly constant(std::vector<std::string> vars, const Q& c);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponent e, const Q& c = Q(1));
  static LaurentPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  size_t nvars() const { return vars_.size(); }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_integer_coefficients() const;

  // -1 when absent.
  int var_index(const std::string& name) const;

  Q coeff(const Exponent& e) const;
  Q constant_coeff() const { return coeff(Exponent(vars_.size(), 0)); }

  // Accumulates c into the coefficient at e, erasing the term when it cancels.
  void add_term(const Exponent& e, const Q& c);

  LaurentPoly operator-() const;
  LaurentPoly scaled(const Q& c) const;
  // x^shift * this.
  LaurentPoly shifted(const Exponent& shift) const;

  // Same terms, renamed variables (no reordering of coordinates).
  LaurentPoly with_vars(std::vector<std::string> vars) const;
  // Re-embeds into a larger or reordered variable list; every current variable
  // must occur in `vars`.
  LaurentPoly embed(const std::vector<std::string>& vars) const;
  // Drops variables that do not occur in any term.
  LaurentPoly trim_unused() const;

  // Componentwise min and max of exponents over the support.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  bool operator==(const LaurentPoly& other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
  }
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

// keep(e, j) decides whether exponent e may be retained after multiplication
// stage j (1-based) of m. Dropped terms never contribute to terms that are
// kept later, provided the predicate is monotone in the sense of the pruning
// rule documented in kernels.hpp.
using PowerPrune = std::function<bool(const Exponent& e, unsigned stage)>;

LaurentPoly pow(const LaurentPoly& a, unsigned m);
LaurentPoly pow(const LaurentPoly& a, unsigned m, const PowerPrune& keep);

// Sum of the terms whose exponents vanish on `over_vars`, as a polynomial in
// the remaining variables (constant polynomial in zero variables when
// over_vars covers everything).
LaurentPoly constant_term(const LaurentPoly& a, const std::vector<std::string>& over_vars);

// Numerator / denominator pair with the denominator nonzero. No automatic
// cancellation; equality is tested by cross multiplication.
class RationalExpr {
 public:
  RationalExpr() = default;
  explicit RationalExpr(LaurentPoly numerator);
  RationalExpr(LaurentPoly numerator, LaurentPoly denominator);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  bool equals(const RationalExpr& other) const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

using Substitution = std::map<std::string, RationalExpr>;

// Composite a(map(x)). Variables missing from the map are sent to themselves
// and must exist in the target variable list; the target list is the common
// variable list of the images (all images must agree), or a's own list when
// the map is empty. Monomial images short-circuit to a Laurent numerator.
RationalExpr substitute(const LaurentPoly& a, const Substitution& map);

// The Laurent polynomial equal to r, or NotLaurent.
LaurentPoly as_laurent(const RationalExpr& r);

// Exact quotient a/b in the Laurent ring. Returns false when b does not
// divide a; b must be nonzero.
bool laurent_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quotient);

}  // namespace tlg
