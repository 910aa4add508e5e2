// SPDX-License-Identifier: Apache-2.0
#include "tlg/catalog.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "tlg/builders.hpp"
#include "tlg/error.hpp"

namespace tlg {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& message) {
  fail("ParseError", where + ": " + message);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_string()) parse_fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::vector<long long>> long_matrix(const Json& j, const std::string& where) {
  return int_matrix_from_json(j, where);
}

Json generator_to_json(const CatalogGenerator& g) {
  switch (g.kind) {
    case GeneratorKind::Wci:
      return Json{{"type", "wci"}, {"weights", g.wci.weights}, {"degrees", g.wci.degrees}};
    case GeneratorKind::Grass:
      return Json{{"type", "grass"}, {"k", g.grass.k}, {"n", g.grass.n}, {"degrees", g.grass.degrees}};
    case GeneratorKind::Toric: {
      Json out{{"type", "toric"}, {"rows", g.toric.rows}, {"kappa", g.toric.kappa}};
      if (!g.toric.hyper.empty()) out["hyper"] = g.toric.hyper;
      return out;
    }
    case GeneratorKind::None:
      break;
  }
  return Json{{"type", "none"}};
}

CatalogGenerator generator_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  CatalogGenerator g;
  const std::string type = string_field(j, "type", where);
  if (type == "none") return g;
  if (type == "wci") {
    g.kind = GeneratorKind::Wci;
    g.wci.weights = int_list_from_json(member(j, "weights", where), where + ".weights");
    g.wci.degrees = int_list_from_json(member(j, "degrees", where), where + ".degrees");
  } else if (type == "grass") {
    g.kind = GeneratorKind::Grass;
    const auto k = int_list_from_json(Json::array({member(j, "k", where), member(j, "n", where)}), where);
    g.grass.k = k[0];
    g.grass.n = k[1];
    g.grass.degrees = int_list_from_json(member(j, "degrees", where), where + ".degrees");
  } else if (type == "toric") {
    g.kind = GeneratorKind::Toric;
    g.toric.rows = long_matrix(member(j, "rows", where), where + ".rows");
    if (j.contains("hyper")) g.toric.hyper = long_matrix(j["hyper"], where + ".hyper");
    if (j.contains("kappa")) {
      for (int v : int_list_from_json(j["kappa"], where + ".kappa")) g.toric.kappa.push_back(v);
    } else {
      for (const auto& row : g.toric.rows) {
        long long s = 0;
        for (long long v : row) s += v;
        g.toric.kappa.push_back(s);
      }
    }
  } else {
    parse_fail(where + ".type", "unknown generator type \"" + type + "\"");
  }
  return g;
}

std::string kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Wci:
      return "wci";
    case GeneratorKind::Grass:
      return "grass";
    case GeneratorKind::Toric:
      return "toric";
    case GeneratorKind::None:
      break;
  }
  return "none";
}

PowerSeries generator_series(const CatalogGenerator& g, unsigned order) {
  switch (g.kind) {
    case GeneratorKind::Wci:
      return iseries_wci(g.wci, order);
    case GeneratorKind::Grass:
      return iseries_grassmannian(g.grass, order);
    case GeneratorKind::Toric:
      return iseries_toric(g.toric, order).series;
    case GeneratorKind::None:
      break;
  }
  fail("BadSpec", "entry has no generator");
}

}  // namespace

std::string CatalogEntry::anchor() const {
  if (generator.kind != GeneratorKind::None) return "paper";
  if (expected_series_prefix && expected_series_prefix->provenance == "paper") return "paper";
  return "regression";
}

Json entry_to_json(const CatalogEntry& e) {
  Json out;
  out["id"] = e.id;
  out["description"] = e.description;
  out["laurent"] = laurent_to_json(e.laurent);
  out["generator"] = generator_to_json(e.generator);
  if (e.expected_series_prefix) {
    Json p = series_to_json(e.expected_series_prefix->series);
    p["provenance"] = e.expected_series_prefix->provenance;
    out["expected_series_prefix"] = p;
  }
  if (e.polytope_notes) out["polytope_notes"] = Json{{"dual_vertices", *e.polytope_notes}};
  if (e.degree) out["degree"] = *e.degree;
  if (e.index) out["index"] = *e.index;
  if (e.rho) out["rho"] = *e.rho;
  if (e.check_minkowski) out["check_minkowski"] = true;
  return out;
}

CatalogEntry entry_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  CatalogEntry e;
  e.id = string_field(j, "id", where);
  if (e.id.empty()) parse_fail(where + ".id", "id must not be empty");
  if (j.contains("description")) e.description = string_field(j, "description", where);
  e.laurent = laurent_from_json(member(j, "laurent", where), where + ".laurent");
  if (j.contains("generator")) e.generator = generator_from_json(j["generator"], where + ".generator");
  if (j.contains("expected_series_prefix")) {
    const std::string pw = where + ".expected_series_prefix";
    const Json& p = j["expected_series_prefix"];
    SeriesPrefix prefix{series_from_json(p, pw), string_field(p, "provenance", pw)};
    if (prefix.provenance != "paper" && prefix.provenance != "derived-regression") {
      parse_fail(pw + ".provenance", "provenance must be \"paper\" or \"derived-regression\"");
    }
    e.expected_series_prefix = prefix;
  }
  if (j.contains("polytope_notes")) {
    const std::string nw = where + ".polytope_notes";
    e.polytope_notes = int_matrix_from_json(member(j["polytope_notes"], "dual_vertices", nw), nw + ".dual_vertices");
  }
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) parse_fail(where + ".degree", "expected an integer");
    e.degree = j["degree"].get<long long>();
  }
  if (j.contains("index")) e.index = int_list_from_json(Json::array({j["index"]}), where + ".index")[0];
  if (j.contains("rho")) e.rho = int_list_from_json(Json::array({j["rho"]}), where + ".rho")[0];
  if (j.contains("check_minkowski")) {
    if (!j["check_minkowski"].is_boolean()) parse_fail(where + ".check_minkowski", "expected a boolean");
    e.check_minkowski = j["check_minkowski"].get<bool>();
  }
  return e;
}

std::vector<CatalogEntry> catalog_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "catalog must be a JSON array");
  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string here = where + "[" + std::to_string(i) + "]";
    out.push_back(entry_from_json(j[i], here));
    if (!ids.insert(out.back().id).second) parse_fail(here + ".id", "duplicate id \"" + out.back().id + "\"");
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  const Json j = read_json_file(path);
  return catalog_from_json(j, path + ": $");
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(entry_to_json(e));
  return out;
}

void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path) {
  write_json_file(catalog_to_json(entries), path);
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("TLG_CATALOG"); env != nullptr && *env != '\0') return env;
  return TLG_DEFAULT_CATALOG;
}

EntryReport verify_entry(const CatalogEntry& e, unsigned order, const KernelOptions& options) {
  EntryReport r;
  r.id = e.id;
  r.anchor = e.anchor();
  auto guarded = [&](const std::string& what, const auto& body) {
    try {
      body();
    } catch (const Error& err) {
      r.failures.push_back(what + ": " + err.code() + ": " + err.what());
    }
  };
  if (order < 2) r.failures.push_back("order must be at least 2");

  guarded("period", [&] {
    PowerSeries target;
    if (e.generator.kind != GeneratorKind::None) {
      r.series_source = kind_name(e.generator.kind);
      target = generator_series(e.generator, order);
    } else if (e.expected_series_prefix) {
      r.series_source = "prefix";
      target = e.expected_series_prefix->series;
      if (target.order() > order) target.coeffs.resize(order);
    } else {
      r.series_source = "none";
      r.failures.push_back("period: no generator and no expected series prefix");
      return;
    }
    if (target.order() < order && r.series_source == "prefix") {
      r.failures.push_back("period: stored prefix has only " + std::to_string(target.order()) + " coefficients");
    }
    r.period = compare_series(phi(e.laurent, static_cast<unsigned>(target.order()), {}, options), target);
    if (!r.period.match) {
      r.failures.push_back("period: mismatch at t^" + std::to_string(*r.period.first_mismatch) + ": got " +
                           to_string(r.period.got) + ", expected " + to_string(r.period.expected));
    }
  });

  guarded("polytope", [&] {
    const LatticePolytope n = newton_polytope(e.laurent);
    if (!n.full_dimensional()) {
      if (e.degree || e.polytope_notes) r.failures.push_back("polytope: N(f) is not full-dimensional");
      return;
    }
    r.reflexive = is_reflexive(n);
    if (!*r.reflexive) {
      if (e.polytope_notes) r.failures.push_back("polytope: notes stored but N(f) is not reflexive");
      return;
    }
    const LatticePolytope d = dual(n).to_lattice();
    r.computed_degree = normalized_volume(d);
    if (e.degree && *r.computed_degree != to_z(*e.degree)) {
      r.failures.push_back("degree: metadata " + std::to_string(*e.degree) + ", normalized volume of the dual " +
                           to_string(*r.computed_degree));
    }
    if (e.polytope_notes) {
      const LatticePolytope expected = LatticePolytope::hull(n.dim(), *e.polytope_notes);
      std::vector<IVec> notes = *e.polytope_notes;
      std::sort(notes.begin(), notes.end());
      r.polytope_notes_ok = notes == d.vertices() && equals(expected, d);
      if (!*r.polytope_notes_ok) r.failures.push_back("polytope: dual vertices differ from polytope_notes");
    }
  });

  if (e.check_minkowski) {
    guarded("minkowski", [&] {
      const MinkowskiResult m = check_minkowski(e.laurent);
      r.minkowski_ok = m.certificate.has_value();
      if (!*r.minkowski_ok) r.failures.push_back("minkowski: " + m.detail);
    });
  }
  return r;
}

bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const Z na(a.substr(i, ei - i), 10), nb(b.substr(j, ej - j), 10);
      if (na != nb) return na < nb;
      if (ei - i != ej - j) return ei - i < ej - j;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

CatalogSummary verify_all(const std::vector<CatalogEntry>& entries, unsigned order, int jobs) {
  CatalogSummary s;
  s.entries.resize(entries.size());
  KernelOptions options;
  options.backend = KernelBackend::Serial;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (size_t i = 0; i < entries.size(); ++i) {
    s.entries[i] = verify_entry(entries[i], order, options);
  }
  std::stable_sort(s.entries.begin(), s.entries.end(),
                   [](const EntryReport& a, const EntryReport& b) { return natural_less(a.id, b.id); });
  for (const auto& r : s.entries) (r.pass() ? s.passed : s.failed)++;
  return s;
}

Json report_to_json(const EntryReport& r) {
  Json out;
  out["id"] = r.id;
  out["anchor"] = r.anchor;
  out["pass"] = r.pass();
  out["series_source"] = r.series_source;
  out["compared"] = r.period.compared;
  if (r.period.first_mismatch) {
    out["first_mismatch"] = Json{{"index", *r.period.first_mismatch},
                                 {"got", to_string(r.period.got)},
                                 {"expected", to_string(r.period.expected)}};
  }
  out["reflexive"] = r.reflexive ? Json(*r.reflexive) : Json(nullptr);
  out["degree"] = r.computed_degree ? Json(to_string(*r.computed_degree)) : Json(nullptr);
  if (r.polytope_notes_ok) out["polytope_notes_ok"] = *r.polytope_notes_ok;
  if (r.minkowski_ok) out["minkowski_ok"] = *r.minkowski_ok;
  out["failures"] = r.failures;
  return out;
}

Json summary_to_json(const CatalogSummary& s) {
  Json entries = Json::array();
  for (const auto& r : s.entries) entries.push_back(report_to_json(r));
  return Json{{"entries", entries}, {"passed", s.passed}, {"failed", s.failed}, {"all_pass", s.all_pass()}};
}

}  // namespace tlg
