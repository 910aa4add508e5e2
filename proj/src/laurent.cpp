// SPDX-License-Identifier: Apache-2.0
#include "tlg/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tlg/error.hpp"

namespace tlg {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) {
    fail("VariableMismatch", "operands use different variable lists");
  }
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<int> indices_of(const LaurentPoly& a, const std::vector<std::string>& names) {
  std::vector<int> idx;
  idx.reserve(names.size());
  for (const auto& n : names) {
    const int i = a.var_index(n);
    if (i < 0) fail("UnknownVariable", "variable \"" + n + "\" is not in the polynomial");
    idx.push_back(i);
  }
  return idx;
}

Q rational_power(const Q& base, int e) {
  Q r(1);
  Q b = e < 0 ? Q(1) / base : base;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= b;
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) fail("DuplicateVariable", "variable names must be unique");
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Q& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponent e, const Q& c) {
  LaurentPoly p(std::move(vars));
  if (e.size() != p.nvars()) fail("BadExponent", "exponent length does not match variables");
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name) {
  LaurentPoly p(std::move(vars));
  const int i = p.var_index(name);
  if (i < 0) fail("UnknownVariable", "variable \"" + name + "\" is not in the list");
  Exponent e(p.nvars(), 0);
  e[i] = 1;
  p.add_term(e, Q(1));
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

int LaurentPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Q LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Q(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Q& c) {
  if (e.size() != vars_.size()) fail("BadExponent", "exponent length does not match variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const { return scaled(Q(-1)); }

LaurentPoly LaurentPoly::scaled(const Q& c) const {
  LaurentPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != vars_.size()) fail("BadExponent", "shift length does not match variables");
  LaurentPoly r(vars_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(add_exponents(e, shift), v);
  return r;
}

LaurentPoly LaurentPoly::with_vars(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size()) fail("VariableMismatch", "renaming must keep the arity");
  LaurentPoly r(std::move(vars));
  r.terms_ = terms_;
  return r;
}

LaurentPoly LaurentPoly::embed(const std::vector<std::string>& vars) const {
  LaurentPoly r(vars);
  std::vector<int> pos;
  for (const auto& v : vars_) {
    const int i = r.var_index(v);
    if (i < 0) fail("UnknownVariable", "variable \"" + v + "\" missing from target list");
    pos.push_back(i);
  }
  for (const auto& [e, c] : terms_) {
    Exponent f(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::trim_unused() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  std::vector<std::string> keep;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) keep.push_back(vars_[i]);
  }
  LaurentPoly r(keep);
  for (const auto& [e, c] : terms_) {
    Exponent f;
    for (size_t i = 0; i < e.size(); ++i) {
      if (used[i]) f.push_back(e[i]);
    }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Exponent LaurentPoly::min_exponent() const {
  Exponent m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent LaurentPoly::max_exponent() const {
  Exponent m(vars_.size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Q mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << vars_[i];
      if (e[i] != 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) {
      out << tlg::to_string(mag);
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << tlg::to_string(mag) << "*" << mono.str();
    }
  }
  return out.str();
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  std::map<Exponent, Q> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Q& slot = acc[add_exponents(ea, eb)];
      slot += ca * cb;
    }
  }
  LaurentPoly r(a.vars());
  for (const auto& [e, c] : acc) r.add_term(e, c);
  return r;
}

LaurentPoly pow(const LaurentPoly& a, unsigned m) {
  LaurentPoly result = LaurentPoly::constant(a.vars(), Q(1));
  LaurentPoly base = a;
  while (m > 0) {
    if (m & 1u) result = mul(result, base);
    m >>= 1u;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

LaurentPoly pow(const LaurentPoly& a, unsigned m, const PowerPrune& keep) {
  LaurentPoly result = LaurentPoly::constant(a.vars(), Q(1));
  for (unsigned stage = 1; stage <= m; ++stage) {
    LaurentPoly next = mul(result, a);
    LaurentPoly kept(a.vars());
    for (const auto& [e, c] : next.terms()) {
      if (keep(e, stage)) kept.add_term(e, c);
    }
    result = std::move(kept);
  }
  return result;
}

LaurentPoly constant_term(const LaurentPoly& a, const std::vector<std::string>& over_vars) {
  const std::vector<int> idx = indices_of(a, over_vars);
  std::vector<bool> over(a.nvars(), false);
  for (int i : idx) over[i] = true;
  std::vector<std::string> rest;
  for (size_t i = 0; i < a.nvars(); ++i) {
    if (!over[i]) rest.push_back(a.vars()[i]);
  }
  LaurentPoly r(rest);
  for (const auto& [e, c] : a.terms()) {
    bool vanishes = true;
    Exponent f;
    for (size_t i = 0; i < e.size(); ++i) {
      if (over[i]) {
        vanishes = vanishes && e[i] == 0;
      } else {
        f.push_back(e[i]);
      }
    }
    if (vanishes) r.add_term(f, c);
  }
  return r;
}

RationalExpr::RationalExpr(LaurentPoly numerator)
    : num_(std::move(numerator)), den_(LaurentPoly::constant(num_.vars(), Q(1))) {}

RationalExpr::RationalExpr(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_vars(num_, den_);
  if (den_.is_zero()) fail("ZeroDenominator", "rational expression with zero denominator");
}

bool RationalExpr::equals(const RationalExpr& other) const {
  return mul(num_, other.den_) == mul(other.num_, den_);
}

RationalExpr substitute(const LaurentPoly& a, const Substitution& map) {
  std::vector<std::string> target = a.vars();
  bool have_target = false;
  for (const auto& [name, img] : map) {
    if (a.var_index(name) < 0) fail("UnknownVariable", "substitution for unknown variable \"" + name + "\"");
    if (!have_target) {
      target = img.vars();
      have_target = true;
    } else if (img.vars() != target) {
      fail("VariableMismatch", "substitution images use different variable lists");
    }
    if (img.denominator().is_zero()) fail("ZeroDenominator", "image of \"" + name + "\" has zero denominator");
  }

  const size_t n = a.nvars();
  std::vector<RationalExpr> images;
  images.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    auto it = map.find(a.vars()[i]);
    if (it != map.end()) {
      images.push_back(it->second);
    } else {
      images.emplace_back(LaurentPoly::variable(target, a.vars()[i]));
    }
  }

  const Exponent lo = a.min_exponent();
  const Exponent hi = a.max_exponent();
  for (size_t i = 0; i < n; ++i) {
    if (lo[i] < 0 && images[i].numerator().is_zero()) {
      fail("ZeroDenominator", "variable \"" + a.vars()[i] + "\" sent to 0 but occurs with negative exponent");
    }
  }

  const bool monomial_map = std::all_of(images.begin(), images.end(), [](const RationalExpr& r) {
    return r.numerator().is_monomial() && r.denominator().is_monomial();
  });
  if (monomial_map) {
    std::vector<Exponent> shift(n);
    std::vector<Q> scale(n);
    for (size_t i = 0; i < n; ++i) {
      const auto& [en, cn] = *images[i].numerator().terms().begin();
      const auto& [ed, cd] = *images[i].denominator().terms().begin();
      shift[i].resize(target.size());
      for (size_t k = 0; k < target.size(); ++k) shift[i][k] = en[k] - ed[k];
      scale[i] = cn / cd;
    }
    LaurentPoly r(target);
    for (const auto& [e, c] : a.terms()) {
      Exponent f(target.size(), 0);
      Q coeff = c;
      for (size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        for (size_t k = 0; k < target.size(); ++k) f[k] += e[i] * shift[i][k];
        coeff *= rational_power(scale[i], e[i]);
      }
      r.add_term(f, coeff);
    }
    return RationalExpr(std::move(r));
  }

  // x_i^e = N^(e+lo_i') D^(hi_i'-e) / (N^lo_i' D^hi_i') with lo' = max(-lo,0)
  // and hi' = max(hi,0); both exponents stay nonnegative over the support.
  std::vector<int> neg(n), posv(n);
  std::vector<std::vector<LaurentPoly>> npow(n), dpow(n);
  for (size_t i = 0; i < n; ++i) {
    neg[i] = std::max(-lo[i], 0);
    posv[i] = std::max(hi[i], 0);
    const int top = neg[i] + posv[i];
    npow[i].push_back(LaurentPoly::constant(target, Q(1)));
    dpow[i].push_back(LaurentPoly::constant(target, Q(1)));
    for (int k = 1; k <= top; ++k) {
      npow[i].push_back(mul(npow[i].back(), images[i].numerator()));
      dpow[i].push_back(mul(dpow[i].back(), images[i].denominator()));
    }
  }
  LaurentPoly num(target);
  for (const auto& [e, c] : a.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, c);
    for (size_t i = 0; i < n; ++i) {
      term = mul(term, npow[i][e[i] + neg[i]]);
      term = mul(term, dpow[i][posv[i] - e[i]]);
    }
    num = add(num, term);
  }
  LaurentPoly den = LaurentPoly::constant(target, Q(1));
  for (size_t i = 0; i < n; ++i) {
    den = mul(den, npow[i][neg[i]]);
    den = mul(den, dpow[i][posv[i]]);
  }
  return RationalExpr(std::move(num), std::move(den));
}

bool laurent_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* quotient) {
  require_same_vars(a, b);
  if (b.is_zero()) fail("ZeroDenominator", "division by the zero polynomial");
  const size_t n = a.nvars();
  if (a.is_zero()) {
    *quotient = LaurentPoly(a.vars());
    return true;
  }
  const Exponent ma = a.min_exponent();
  const Exponent mb = b.min_exponent();
  Exponent neg_ma(n), neg_mb(n), net(n);
  for (size_t i = 0; i < n; ++i) {
    neg_ma[i] = -ma[i];
    neg_mb[i] = -mb[i];
    net[i] = ma[i] - mb[i];
  }
  // Both sides become honest polynomials and b loses every monomial factor;
  // Laurent divisibility is then polynomial divisibility, decided by the
  // lex-order division algorithm (a single divisor is its own Groebner basis).
  LaurentPoly r = a.shifted(neg_ma);
  const LaurentPoly bn = b.shifted(neg_mb);
  const auto& [eb, cb] = *bn.terms().rbegin();
  LaurentPoly q(a.vars());
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms().rbegin();
    Exponent d(n);
    for (size_t i = 0; i < n; ++i) {
      d[i] = er[i] - eb[i];
      if (d[i] < 0) return false;
    }
    const Q c = cr / cb;
    q.add_term(d, c);
    r = sub(r, bn.shifted(d).scaled(c));
  }
  *quotient = q.shifted(net);
  return true;
}

LaurentPoly as_laurent(const RationalExpr& r) {
  LaurentPoly q;
  if (!laurent_divide(r.numerator(), r.denominator(), &q)) {
    fail("NotLaurent", "denominator does not divide numerator in the Laurent ring");
  }
  return q;
}

}  // namespace tlg
