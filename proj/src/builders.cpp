// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <functional>
#include <map>

#include "tlg/builders.hpp"
#include "tlg/error.hpp"

namespace tlg {

std::vector<std::string> default_variable_names(size_t n) {
  static const char* kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? kShort[i] : "x" + std::to_string(i + 1));
  return out;
}

NefQuality classify_partition(const WciSpec& spec, const NefPartition& part) {
  const size_t l = spec.degrees.size();
  if (part.groups.size() != l + 1) fail("BadPartition", "partition needs one group per hypersurface plus E_0");
  std::vector<int> seen(spec.weights.size(), 0);
  for (const auto& g : part.groups) {
    for (int j : g) {
      if (j < 0 || static_cast<size_t>(j) >= spec.weights.size()) fail("BadPartition", "index out of range");
      ++seen[j];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    fail("BadPartition", "every weight index must lie in exactly one group");
  }
  for (size_t i = 1; i <= l; ++i) {
    int sum = 0;
    for (int j : part.groups[i]) sum += spec.weights[j];
    if (sum != spec.degrees[i - 1]) fail("BadPartition", "group E_" + std::to_string(i) + " does not sum to its degree");
  }
  const auto& e0 = part.groups[0];
  const int ones = static_cast<int>(std::count_if(e0.begin(), e0.end(), [&](int j) { return spec.weights[j] == 1; }));
  if (!e0.empty() && ones == static_cast<int>(e0.size())) return NefQuality::VeryGood;
  if (ones > 0) return NefQuality::Good;
  return NefQuality::Plain;
}

std::vector<NefPartition> find_nef_partitions(const WciSpec& spec, NefQuality want) {
  spec.validate();
  const size_t l = spec.degrees.size();
  const size_t n = spec.weights.size();
  std::vector<int> sums(l + 1, 0);
  std::vector<int> assign(n, 0);
  std::vector<NefPartition> out;
  std::function<void(size_t)> visit = [&](size_t j) {
    if (j == n) {
      for (size_t i = 1; i <= l; ++i) {
        if (sums[i] != spec.degrees[i - 1]) return;
      }
      NefPartition p;
      p.groups.assign(l + 1, {});
      for (size_t t = 0; t < n; ++t) p.groups[assign[t]].push_back(static_cast<int>(t));
      p.quality = classify_partition(spec, p);
      if (static_cast<int>(p.quality) >= static_cast<int>(want)) out.push_back(std::move(p));
      return;
    }
    for (size_t g = 0; g <= l; ++g) {
      if (g > 0 && sums[g] + spec.weights[j] > spec.degrees[g - 1]) continue;
      sums[g] += spec.weights[j];
      assign[j] = static_cast<int>(g);
      visit(j + 1);
      sums[g] -= spec.weights[j];
    }
  };
  visit(0);
  return out;
}

LaurentPoly wci_laurent(const WciSpec& spec, const NefPartition& part) {
  spec.validate();
  if (static_cast<int>(classify_partition(spec, part)) < static_cast<int>(NefQuality::Good)) {
    fail("BadPartition", "wci_laurent needs a good nef-partition (a weight-1 index in E_0)");
  }
  const size_t l = spec.degrees.size();
  // Kept indices per group after dropping one.
  std::vector<std::vector<int>> kept(l + 1);
  for (size_t i = 0; i <= l; ++i) {
    const auto& g = part.groups[i];
    int drop = -1;
    if (i == 0) {
      for (int j : g) {
        if (spec.weights[j] == 1) drop = j;
      }
    } else {
      for (int j : g) {
        if (drop < 0 || spec.weights[j] >= spec.weights[drop]) drop = j;
      }
    }
    for (int j : g) {
      if (j != drop) kept[i].push_back(j);
    }
  }
  std::vector<std::pair<size_t, int>> slots;  // (group, weight index)
  for (size_t i = 1; i <= l; ++i) {
    for (int j : kept[i]) slots.emplace_back(i, j);
  }
  for (int j : kept[0]) slots.emplace_back(0, j);
  const auto vars = default_variable_names(slots.size());
  const size_t m = slots.size();

  Exponent denom(m, 0);
  for (size_t v = 0; v < m; ++v) denom[v] = -spec.weights[slots[v].second];
  LaurentPoly f = LaurentPoly::monomial(vars, denom);
  for (size_t i = 1; i <= l; ++i) {
    LaurentPoly factor = LaurentPoly::constant(vars, Q(1));
    for (size_t v = 0; v < m; ++v) {
      if (slots[v].first == i) factor = factor + LaurentPoly::variable(vars, vars[v]);
    }
    f = f * pow(factor, static_cast<unsigned>(spec.degrees[i - 1]));
  }
  for (size_t v = 0; v < m; ++v) {
    if (slots[v].first == 0) f = f + LaurentPoly::variable(vars, vars[v]);
  }
  return f;
}

LaurentPoly wci_laurent(const WciSpec& spec) {
  auto very_good = find_nef_partitions(spec, NefQuality::VeryGood);
  if (!very_good.empty()) return wci_laurent(spec, very_good.front());
  auto good = find_nef_partitions(spec, NefQuality::Good);
  if (good.empty()) fail("BadPartition", "no good nef-partition exists for this weighted complete intersection");
  return wci_laurent(spec, good.front());
}

std::vector<std::pair<size_t, size_t>> polytope_edges(const LatticePolytope& p) {
  if (!p.full_dimensional()) fail("NotFullDimensional", "edges need a full-dimensional polytope");
  const auto& vs = p.vertices();
  const size_t d = static_cast<size_t>(p.dim());
  std::vector<std::vector<size_t>> incident(vs.size());
  for (size_t v = 0; v < vs.size(); ++v) {
    for (size_t f = 0; f < p.facets().size(); ++f) {
      const auto& fc = p.facets()[f];
      long long s = 0;
      for (size_t i = 0; i < d; ++i) s += fc.normal[i] * vs[v][i];
      if (s == fc.offset) incident[v].push_back(f);
    }
  }
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t a = 0; a < vs.size(); ++a) {
    for (size_t b = a + 1; b < vs.size(); ++b) {
      IMat normals;
      std::vector<size_t> common;
      std::set_intersection(incident[a].begin(), incident[a].end(), incident[b].begin(), incident[b].end(),
                            std::back_inserter(common));
      for (size_t f : common) normals.push_back(p.facets()[f].normal);
      if (matrix_rank(normals, d) == d - 1) out.emplace_back(a, b);
    }
  }
  return out;
}

LaurentPoly binomial_principle(const LatticePolytope& p) {
  const size_t d = static_cast<size_t>(p.dim());
  const auto vars = default_variable_names(d);
  std::map<IVec, Q> coeff;
  FactorialTable fact;
  for (const auto& v : p.vertices()) coeff[v] = 1;
  for (const auto& [a, b] : polytope_edges(p)) {
    const IVec& u = p.vertices()[a];
    const IVec& v = p.vertices()[b];
    IVec step(d);
    for (size_t i = 0; i < d; ++i) step[i] = v[i] - u[i];
    const long long len = gcd_vec(step);
    for (auto& s : step) s /= len;
    for (long long i = 1; i < len; ++i) {
      IVec x(d);
      for (size_t t = 0; t < d; ++t) x[t] = u[t] + i * step[t];
      coeff[x] = Q(fact.binomial(len, i));
    }
  }
  const IVec origin(d, 0);
  LaurentPoly f(vars);
  for (const auto& x : lattice_points(p)) {
    if (x == origin) continue;
    auto it = coeff.find(x);
    if (it == coeff.end()) {
      fail("InteriorFacetPoint", "lattice point off the edges of the polytope; the binomial principle does not apply");
    }
    f.add_term(Exponent(x.begin(), x.end()), it->second);
  }
  return f;
}

LaurentPoly set_parameters_to_one(const LaurentPoly& f, const std::vector<std::string>& params) {
  std::vector<std::string> rest;
  std::vector<int> keep;
  for (size_t i = 0; i < f.nvars(); ++i) {
    if (std::find(params.begin(), params.end(), f.vars()[i]) == params.end()) {
      rest.push_back(f.vars()[i]);
      keep.push_back(static_cast<int>(i));
    }
  }
  LaurentPoly out(rest);
  for (const auto& [e, c] : f.terms()) {
    Exponent r;
    for (int i : keep) r.push_back(e[i]);
    out.add_term(r, c);
  }
  return out;
}

}  // namespace tlg
