// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <map>

#include "tlg/builders.hpp"
#include "tlg/error.hpp"

namespace tlg {

namespace {

using Marking = std::map<IVec, Exponent>;  // point -> monomial in the parameters

LaurentPoly assemble(const std::map<IVec, LaurentPoly>& coeffs, const std::vector<std::string>& params) {
  std::vector<std::string> vars{"x", "y"};
  vars.insert(vars.end(), params.begin(), params.end());
  LaurentPoly f(vars);
  for (const auto& [p, c] : coeffs) {
    for (const auto& [e, q] : c.terms()) {
      Exponent full{static_cast<int>(p[0]), static_cast<int>(p[1])};
      full.insert(full.end(), e.begin(), e.end());
      f.add_term(full, q);
    }
  }
  return f;
}

Exponent mono_mul(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Boundary neighbours of a vertex K of a polygon: the nearest lattice point
// along each of the two edges through K.
std::vector<IVec> neighbours(const LatticePolytope& p, const IVec& k) {
  std::vector<IVec> out;
  for (const auto& f : p.facets()) {
    if (f.normal[0] * k[0] + f.normal[1] * k[1] != f.offset) continue;
    for (const auto& v : p.vertices()) {
      if (v == k || f.normal[0] * v[0] + f.normal[1] * v[1] != f.offset) continue;
      const IVec d = primitive(IVec{v[0] - k[0], v[1] - k[1]});
      out.push_back(IVec{k[0] + d[0], k[1] + d[1]});
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> del_pezzo_params(const DelPezzoScript& script) {
  if (!script.params.empty()) return script.params;
  if (script.base == DelPezzoBase::P2) {
    std::vector<std::string> out;
    for (size_t i = 0; i <= script.steps.size(); ++i) out.push_back("q" + std::to_string(i));
    return out;
  }
  return {"qa", "qb"};
}

LaurentPoly del_pezzo_model(const DelPezzoScript& script, CoefficientMode mode) {
  const auto params = del_pezzo_params(script);
  const size_t np = params.size();
  auto param_mono = [&](size_t i) {
    Exponent e(np, 0);
    e[i] = 1;
    return e;
  };
  auto q = [&](size_t i) { return LaurentPoly::monomial(params, param_mono(i)); };
  const LaurentPoly one = LaurentPoly::constant(params, Q(1));

  if (script.base != DelPezzoBase::P2) {
    if (!script.steps.empty()) fail("BadBase", "blow-up steps are supported only over the P2 base");
    if (np != 2) fail("BadBase", "quadric bases take exactly two parameters");
    std::map<IVec, LaurentPoly> c;
    if (script.base == DelPezzoBase::Quadric) {
      c[{1, 0}] = one;
      c[{-1, 0}] = q(0);
      c[{0, 1}] = one;
      c[{0, -1}] = q(1);
    } else if (mode == CoefficientMode::Toric) {
      // Crepant resolution F_2 with D = alpha*s + beta*f: params are
      // (e^{-alpha}, e^{-beta}).
      c[{0, 1}] = one;
      c[{-1, -1}] = q(1);
      c[{0, -1}] = q(0);
      c[{1, -1}] = one;
    } else {
      // Quadric with an (a,b)-divisor: params are (e^{-a}, e^{-b}).
      c[{0, 1}] = one;
      c[{-1, -1}] = q(0);
      c[{0, -1}] = q(0) + q(1);
      c[{1, -1}] = q(1);
    }
    return assemble(c, params);
  }

  if (np != script.steps.size() + 1) fail("BadBase", "P2 scripts need one parameter per step plus one");
  Marking marks;
  marks[{1, 0}] = Exponent(np, 0);
  marks[{0, 1}] = Exponent(np, 0);
  marks[{-1, -1}] = param_mono(0);
  for (size_t s = 0; s < script.steps.size(); ++s) {
    const IVec& k = script.steps[s];
    if (k.size() != 2) fail("BadBase", "steps must be points in Z^2");
    std::vector<IVec> pts;
    for (const auto& [p, m] : marks) pts.push_back(p);
    const LatticePolytope old_hull = LatticePolytope::hull(2, pts);
    if (old_hull.contains(k)) fail("PointInsideHull", "added point lies inside the current polygon");
    pts.push_back(k);
    const LatticePolytope hull = LatticePolytope::hull(2, pts);
    if (!hull.origin_interior()) fail("BadBase", "polygon after a step must contain the origin strictly inside");
    for (const auto& x : lattice_points(hull, PointRegion::Boundary)) {
      if (x != k && !marks.count(x)) {
        fail("BadBase", "step adds more than one lattice point to the polygon");
      }
    }
    const auto nb = neighbours(hull, k);
    if (nb.size() != 2) fail("Internal", "added point must have two boundary neighbours");
    for (const auto& x : nb) {
      if (!marks.count(x)) fail("Internal", "neighbour without marking");
    }
    marks[k] = mono_mul(mono_mul(marks.at(nb[0]), marks.at(nb[1])), param_mono(s + 1));
  }
  // Points that became interior carry no coefficient.
  std::vector<IVec> pts;
  for (const auto& [p, m] : marks) pts.push_back(p);
  const LatticePolytope hull = LatticePolytope::hull(2, pts);
  std::map<IVec, LaurentPoly> c;
  if (mode == CoefficientMode::Toric) {
    for (const auto& x : lattice_points(hull, PointRegion::Boundary)) {
      c[x] = LaurentPoly::monomial(params, marks.at(x));
    }
    return assemble(c, params);
  }
  // Surface mode: along each edge K_0..K_r the coefficient at K_i is the
  // s^i coefficient of m_0 prod_t (1 + (m_t / m_{t-1}) s).
  std::vector<std::string> ps = params;
  ps.push_back("s");
  for (const auto& f : hull.facets()) {
    std::vector<IVec> on;
    for (const auto& x : lattice_points(hull, PointRegion::Boundary)) {
      if (f.normal[0] * x[0] + f.normal[1] * x[1] == f.offset) on.push_back(x);
    }
    std::sort(on.begin(), on.end());
    Exponent m0 = marks.at(on[0]);
    m0.push_back(0);
    LaurentPoly prod = LaurentPoly::monomial(ps, m0);
    for (size_t t = 1; t < on.size(); ++t) {
      Exponent ratio(np + 1, 0);
      const Exponent& a = marks.at(on[t]);
      const Exponent& b = marks.at(on[t - 1]);
      for (size_t i = 0; i < np; ++i) ratio[i] = a[i] - b[i];
      ratio[np] = 1;
      prod = prod * (LaurentPoly::constant(ps, Q(1)) + LaurentPoly::monomial(ps, ratio));
    }
    for (size_t i = 0; i < on.size(); ++i) {
      LaurentPoly ci(params);
      for (const auto& [e, v] : prod.terms()) {
        if (e[np] == static_cast<int>(i)) ci.add_term(Exponent(e.begin(), e.end() - 1), v);
      }
      c[on[i]] = ci;
    }
  }
  return assemble(c, params);
}

}  // namespace tlg
