// SPDX-License-Identifier: Apache-2.0
#include "tlg/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "tlg/error.hpp"

namespace tlg {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& message) {
  fail("ParseError", where + ": " + message);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string at(const std::string& where, const char* key) { return where + "." + key; }
std::string at(const std::string& where, size_t i) { return where + "[" + std::to_string(i) + "]"; }

long long integer_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<long long>();
}

int small_int_from_json(const Json& j, const std::string& where) {
  const long long v = integer_from_json(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    parse_fail(where, "integer out of range");
  }
  return static_cast<int>(v);
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  return j;
}

}  // namespace

Json rational_to_json(const Q& q) { return to_string(q); }

Q rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Q(to_z(j.get<long long>()));
  if (!j.is_string()) parse_fail(where, "expected a rational string \"p\" or \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

Json laurent_to_json(const LaurentPoly& f) {
  Json out;
  out["vars"] = f.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"e", e}, {"c", to_string(c)}});
  out["terms"] = terms;
  return out;
}

LaurentPoly laurent_from_json(const Json& j, const std::string& where) {
  const Json& vars = array_at(member(j, "vars", where), at(where, "vars"));
  std::vector<std::string> names;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) parse_fail(at(at(where, "vars"), i), "expected a variable name");
    names.push_back(vars[i].get<std::string>());
    for (size_t p = 0; p + 1 < names.size(); ++p) {
      if (names[p] == names.back()) parse_fail(at(at(where, "vars"), i), "repeated variable \"" + names.back() + "\"");
    }
  }
  LaurentPoly f(names);
  const std::string tw = at(where, "terms");
  const Json& terms = array_at(member(j, "terms", where), tw);
  for (size_t t = 0; t < terms.size(); ++t) {
    const std::string here = at(tw, t);
    const std::string ew = at(here, "e");
    const Json& e = array_at(member(terms[t], "e", here), ew);
    if (e.size() != names.size()) parse_fail(ew, "exponent length differs from the variable count");
    Exponent ex;
    for (size_t i = 0; i < e.size(); ++i) ex.push_back(small_int_from_json(e[i], at(ew, i)));
    f.add_term(ex, rational_from_json(member(terms[t], "c", here), at(here, "c")));
  }
  return f;
}

Json series_to_json(const PowerSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_string(c));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const Json& j, const std::string& where) {
  const std::string cw = at(where, "coeffs");
  const Json& coeffs = array_at(member(j, "coeffs", where), cw);
  PowerSeries s;
  for (size_t i = 0; i < coeffs.size(); ++i) s.coeffs.push_back(rational_from_json(coeffs[i], at(cw, i)));
  if (j.contains("order")) {
    const long long order = integer_from_json(j["order"], at(where, "order"));
    if (order < 0 || static_cast<size_t>(order) != s.order()) {
      parse_fail(at(where, "order"), "order differs from the number of coefficients");
    }
  }
  return s;
}

Json polytope_to_json(const LatticePolytope& p) {
  return Json{{"dim", p.dim()}, {"vertices", p.vertices()}};
}

LatticePolytope polytope_from_json(const Json& j, const std::string& where) {
  const int dim = small_int_from_json(member(j, "dim", where), at(where, "dim"));
  if (dim < 1) parse_fail(at(where, "dim"), "dimension must be positive");
  const IMat pts = int_matrix_from_json(member(j, "vertices", where), at(where, "vertices"));
  if (pts.empty()) parse_fail(at(where, "vertices"), "expected at least one point");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != static_cast<size_t>(dim)) parse_fail(at(at(where, "vertices"), i), "point length differs from dim");
  }
  return LatticePolytope::hull(dim, pts);
}

Json rational_polytope_to_json(const RationalPolytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(to_string(c));
    verts.push_back(row);
  }
  return Json{{"dim", p.dim}, {"vertices", verts}};
}

Json gram_to_json(const GramLattice& l) { return Json{{"gram", l.gram}}; }

GramLattice gram_from_json(const Json& j, const std::string& where) {
  const std::string gw = at(where, "gram");
  GramLattice l{int_matrix_from_json(member(j, "gram", where), gw)};
  for (size_t i = 0; i < l.rank(); ++i) {
    if (l.gram[i].size() != l.rank()) parse_fail(at(gw, i), "Gram matrix must be square");
  }
  for (size_t i = 0; i < l.rank(); ++i) {
    for (size_t k = 0; k < i; ++k) {
      if (l.gram[i][k] != l.gram[k][i]) parse_fail(at(at(gw, i), k), "Gram matrix must be symmetric");
    }
  }
  return l;
}

Json operator_to_json(const DifferentialOperator& op) {
  Json terms = Json::array();
  for (const auto& [k, c] : op.coeffs) terms.push_back(Json{{"t", k.first}, {"theta", k.second}, {"c", to_string(c)}});
  return Json{{"terms", terms}};
}

DifferentialOperator operator_from_json(const Json& j, const std::string& where) {
  const std::string tw = at(where, "terms");
  const Json& terms = array_at(member(j, "terms", where), tw);
  DifferentialOperator op;
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string here = at(tw, i);
    const int t = small_int_from_json(member(terms[i], "t", here), at(here, "t"));
    const int theta = small_int_from_json(member(terms[i], "theta", here), at(here, "theta"));
    if (t < 0 || theta < 0) parse_fail(here, "degrees must be nonnegative");
    op.add(t, theta, rational_from_json(member(terms[i], "c", here), at(here, "c")));
  }
  return op;
}

IMat int_matrix_from_json(const Json& j, const std::string& where) {
  array_at(j, where);
  IMat m;
  for (size_t r = 0; r < j.size(); ++r) {
    const std::string rw = at(where, r);
    array_at(j[r], rw);
    IVec row;
    for (size_t c = 0; c < j[r].size(); ++c) row.push_back(integer_from_json(j[r][c], at(rw, c)));
    m.push_back(row);
  }
  return m;
}

std::vector<int> int_list_from_json(const Json& j, const std::string& where) {
  array_at(j, where);
  std::vector<int> v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(small_int_from_json(j[i], at(where, i)));
  return v;
}

Json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IoError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail("ParseError", path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot write " + path);
  out << dump(j);
  if (!out) fail("IoError", "failed writing " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tlg
