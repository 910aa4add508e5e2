// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tlg/builders.hpp"
#include "tlg/catalog.hpp"
#include "tlg/error.hpp"
#include "tlg/grassmann.hpp"
#include "tlg/hodge.hpp"
#include "tlg/json_io.hpp"
#include "tlg/lattice.hpp"
#include "tlg/mutation.hpp"
#include "tlg/picard_fuchs.hpp"
#include "tlg/polytope.hpp"
#include "tlg/series.hpp"

namespace tlg::cli {

namespace {

// Thrown for missing or inconsistent arguments detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<unsigned> order;
  int jobs = 1;
  std::string output = "text";
  std::string input;
  unsigned long long seed = 1;  // reserved for randomized fallbacks; none is active
};

struct Printer {
  std::ostream& out;
  bool json = false;
  void emit(const Json& j, const std::string& text) const {
    if (json) {
      out << dump(j);
    } else {
      out << text << "\n";
    }
  }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string series_text(const PowerSeries& s) {
  std::vector<std::string> parts;
  for (const auto& c : s.coeffs) parts.push_back(to_string(c));
  return join(parts, ",");
}

std::string vec_text(const IVec& v) {
  std::vector<std::string> parts;
  for (long long x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string qvec_text(const QVec& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string matrix_text(const IMat& m) {
  std::vector<std::string> rows;
  for (const auto& r : m) rows.push_back(vec_text(r));
  return join(rows, "\n");
}

Json diamond_json(const HodgeDiamond& d) { return Json{{"dimension", d.dimension}, {"h", d.h}}; }

std::string diamond_text(const HodgeDiamond& d) {
  std::ostringstream os;
  for (int p = d.dimension; p >= 0; --p) {
    for (int q = 0; q <= d.dimension; ++q) os << (q ? " " : "") << d.h[p][q];
    if (p) os << "\n";
  }
  return os.str();
}

Json input_json(const Globals& g) {
  if (g.input.empty()) throw UsageError("this command needs --input/-i");
  return read_json_file(g.input);
}

unsigned order_or(const Globals& g, unsigned fallback) { return g.order.value_or(fallback); }

LaurentPoly read_laurent(const std::string& path) { return laurent_from_json(read_json_file(path), path + ": $"); }

PowerSeries read_series(const std::string& path) { return series_from_json(read_json_file(path), path + ": $"); }

LatticePolytope read_polytope(const std::string& path) {
  return polytope_from_json(read_json_file(path), path + ": $");
}

Json period_report_json(const PeriodReport& r) {
  Json out{{"match", r.match}, {"compared", r.compared}};
  if (r.first_mismatch) {
    out["first_mismatch"] =
        Json{{"index", *r.first_mismatch}, {"got", to_string(r.got)}, {"expected", to_string(r.expected)}};
  }
  return out;
}

std::string period_report_text(const PeriodReport& r) {
  if (r.match) return "match (" + std::to_string(r.compared) + " coefficients)";
  return "mismatch at t^" + std::to_string(*r.first_mismatch) + ": got " + to_string(r.got) + ", expected " +
         to_string(r.expected);
}

Json laurent_output(const LaurentPoly& f) { return laurent_to_json(f); }

GramLattice lattice_input(const Globals& g, const std::string& name) {
  if (!name.empty()) return standard_lattice(name);
  return gram_from_json(input_json(g), g.input + ": $");
}

DelPezzoScript script_from_json(const Json& j, const std::string& where) {
  DelPezzoScript s;
  if (!j.is_object()) fail("ParseError", where + ": expected an object");
  const std::string base = j.value("base", "P2");
  if (base == "P2") {
    s.base = DelPezzoBase::P2;
  } else if (base == "Quadric") {
    s.base = DelPezzoBase::Quadric;
  } else if (base == "QuadricF2") {
    s.base = DelPezzoBase::QuadricF2;
  } else {
    fail("ParseError", where + ".base: unknown base \"" + base + "\"");
  }
  if (j.contains("steps")) s.steps = int_matrix_from_json(j["steps"], where + ".steps");
  if (j.contains("params")) {
    for (size_t i = 0; i < j["params"].size(); ++i) {
      if (!j["params"][i].is_string()) fail("ParseError", where + ".params[" + std::to_string(i) + "]: expected a name");
      s.params.push_back(j["params"][i].get<std::string>());
    }
  }
  return s;
}

NefPartition partition_from_json(const Json& j, const std::string& where) {
  NefPartition p;
  if (!j.is_object() || !j.contains("groups")) fail("ParseError", where + ": expected {\"groups\": [[...], ...]}");
  for (size_t i = 0; i < j["groups"].size(); ++i) {
    p.groups.push_back(int_list_from_json(j["groups"][i], where + ".groups[" + std::to_string(i) + "]"));
  }
  return p;
}

std::string quality_name(NefQuality q) {
  switch (q) {
    case NefQuality::VeryGood:
      return "very good";
    case NefQuality::Good:
      return "good";
    case NefQuality::Plain:
      break;
  }
  return "plain";
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with toric Landau-Ginzburg models", "tlg"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--order", g.order, "Number of series coefficients (t^0 .. t^{order-1})");
  app.add_option("--jobs", g.jobs, "Worker threads for parallel commands")->check(CLI::PositiveNumber);
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-i,--input", g.input, "Input JSON file ('-' for stdin)");
  app.add_option("--seed", g.seed, "Seed for randomized fallbacks");

  std::function<int(const Printer&)> action;
  auto leaf = [&](CLI::App* sub, std::function<int(const Printer&)> body) {
    sub->callback([&action, body] { action = body; });
  };

  // phi
  auto* phi_cmd = app.add_subcommand("phi", "Constant-term series of a Laurent polynomial");
  std::string period_vars;
  phi_cmd->add_option("--period-vars", period_vars, "Comma-separated variables to take the constant term over");
  leaf(phi_cmd, [&](const Printer& p) {
    const LaurentPoly f = laurent_from_json(input_json(g), g.input + ": $");
    KernelOptions opt;
    opt.backend = g.jobs > 1 ? KernelBackend::OpenMP : KernelBackend::Serial;
    opt.threads = g.jobs;
    const PowerSeries s = phi(f, order_or(g, 10), split_list(period_vars), opt);
    p.emit(series_to_json(s), series_text(s));
    return 0;
  });

  // iseries
  auto* is_cmd = app.add_subcommand("iseries", "Regularized I-series");
  is_cmd->require_subcommand(1);
  std::vector<int> weights, degrees;
  int gk = 0, gn = 0;
  auto* is_wci = is_cmd->add_subcommand("wci", "Weighted complete intersection");
  is_wci->add_option("--weights", weights)->delimiter(',')->required();
  is_wci->add_option("--degrees", degrees)->delimiter(',');
  leaf(is_wci, [&](const Printer& p) {
    const PowerSeries s = iseries_wci(WciSpec{weights, degrees}, order_or(g, 10));
    p.emit(series_to_json(s), series_text(s));
    return 0;
  });
  auto* is_grass = is_cmd->add_subcommand("grass", "Complete intersection in G(k, n+k)");
  is_grass->add_option("--n", gn)->required();
  is_grass->add_option("--k", gk)->required();
  is_grass->add_option("--degrees", degrees)->delimiter(',');
  leaf(is_grass, [&](const Printer& p) {
    const PowerSeries s = iseries_grassmannian(GrassSpec{gk, gn, degrees}, order_or(g, 10));
    p.emit(series_to_json(s), series_text(s));
    return 0;
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Compare phi(f) with a stored series");
  std::string against;
  verify_cmd->add_option("--against", against, "Series JSON")->required();
  leaf(verify_cmd, [&](const Printer& p) {
    const LaurentPoly f = laurent_from_json(input_json(g), g.input + ": $");
    PowerSeries target = read_series(against);
    if (g.order && *g.order < target.order()) target.coeffs.resize(*g.order);
    const PeriodReport r = verify_period(f, target);
    p.emit(period_report_json(r), period_report_text(r));
    return r.match ? 0 : 1;
  });

  // build
  auto* build_cmd = app.add_subcommand("build", "Construct Laurent polynomials");
  build_cmd->require_subcommand(1);
  std::string partition = "auto";
  auto* b_wci = build_cmd->add_subcommand("wci", "Givental-type model of a weighted complete intersection");
  b_wci->add_option("--weights", weights)->delimiter(',')->required();
  b_wci->add_option("--degrees", degrees)->delimiter(',');
  b_wci->add_option("--partition", partition, "auto or a JSON file {\"groups\":[[...],...]}");
  leaf(b_wci, [&](const Printer& p) {
    const WciSpec spec{weights, degrees};
    LaurentPoly f;
    std::string quality;
    if (partition == "auto") {
      f = wci_laurent(spec);
    } else {
      const NefPartition part = partition_from_json(read_json_file(partition), partition + ": $");
      quality = quality_name(classify_partition(spec, part));
      f = wci_laurent(spec, part);
    }
    Json j = laurent_output(f);
    if (!quality.empty()) j["partition_quality"] = quality;
    p.emit(j, f.to_string());
    return 0;
  });
  std::string method = "eliminate", sort_order = "none";
  bool explain = false;
  auto* b_grass = build_cmd->add_subcommand("grass", "Quiver model of a complete intersection in G(k, n+k)");
  b_grass->add_option("--n", gn)->required();
  b_grass->add_option("--k", gk)->required();
  b_grass->add_option("--degrees", degrees)->delimiter(',');
  b_grass->add_option("--method", method)->check(CLI::IsMember({"eliminate", "closed"}));
  b_grass->add_option("--sort", sort_order, "Reorder the degrees first")->check(CLI::IsMember({"none", "asc", "desc"}));
  b_grass->add_flag("--explain", explain, "Print blocks, weight tables, M and its inverse");
  leaf(b_grass, [&](const Printer& p) {
    GrassSpec spec{gk, gn, degrees};
    if (sort_order == "asc") std::sort(spec.degrees.begin(), spec.degrees.end());
    if (sort_order == "desc") std::sort(spec.degrees.rbegin(), spec.degrees.rend());
    const LaurentPoly f = method == "closed" ? closed_formula_laurent(spec) : bcfks_laurent(spec);
    Json j = laurent_output(f);
    std::string text = f.to_string();
    if (explain) {
      const std::string e = explain_model(spec);
      j["explain"] = e;
      text = e + "\n" + text;
    }
    p.emit(j, text);
    return 0;
  });
  std::string mode = "toric";
  bool params_one = false;
  auto* b_dp = build_cmd->add_subcommand("delpezzo", "del Pezzo model from a point-adding script");
  b_dp->add_option("--mode", mode)->check(CLI::IsMember({"toric", "surface"}));
  b_dp->add_flag("--params-one", params_one, "Set every parameter to 1");
  leaf(b_dp, [&](const Printer& p) {
    const DelPezzoScript script = script_from_json(input_json(g), g.input + ": $");
    LaurentPoly f = del_pezzo_model(script, mode == "surface" ? CoefficientMode::Surface : CoefficientMode::Toric);
    if (params_one) f = set_parameters_to_one(f, del_pezzo_params(script));
    p.emit(laurent_output(f), f.to_string());
    return 0;
  });
  auto* b_bin = build_cmd->add_subcommand("binomial", "Binomial-principle polynomial of a polytope");
  leaf(b_bin, [&](const Printer& p) {
    const LaurentPoly f = binomial_principle(polytope_from_json(input_json(g), g.input + ": $"));
    p.emit(laurent_output(f), f.to_string());
    return 0;
  });

  // minkowski
  auto* mk_cmd = app.add_subcommand("minkowski", "Minkowski polynomial checks");
  mk_cmd->require_subcommand(1);
  int max_summands = 4;
  auto* mk_check = mk_cmd->add_subcommand("check", "Search a facet-wise Minkowski certificate");
  mk_check->add_option("--max-summands", max_summands)->check(CLI::PositiveNumber);
  leaf(mk_check, [&](const Printer& p) {
    const LaurentPoly f = laurent_from_json(input_json(g), g.input + ": $");
    const MinkowskiResult r = check_minkowski(f, max_summands);
    Json j{{"found", r.certificate.has_value()}};
    std::ostringstream text;
    if (r.certificate) {
      Json facets = Json::array();
      text << "certificate found";
      for (const auto& fc : r.certificate->facets) {
        Json summands = Json::array();
        for (const auto& s : fc.summands) summands.push_back(s);
        facets.push_back(Json{{"normal", fc.facet.normal}, {"height", fc.facet.height()}, {"summands", summands}});
        text << "\n" << vec_text(fc.facet.normal) << ": " << fc.summands.size() << " summands";
      }
      j["facets"] = facets;
    } else {
      j["detail"] = r.detail;
      text << "not found (bounded search): " << r.detail;
    }
    p.emit(j, text.str());
    return 0;
  });

  // mutate
  auto* mut_cmd = app.add_subcommand("mutate", "Elementary mutation f(x, y*factor^power)");
  std::string pivot, factor_path;
  int power = -1;
  mut_cmd->add_option("--pivot", pivot)->required();
  mut_cmd->add_option("--factor", factor_path, "Factor polynomial JSON")->required();
  mut_cmd->add_option("--power", power);
  leaf(mut_cmd, [&](const Printer& p) {
    const LaurentPoly f = laurent_from_json(input_json(g), g.input + ": $");
    MutationRule rule;
    rule.power = power;
    const LaurentPoly m = elementary_mutation(f, pivot, read_laurent(factor_path), rule);
    p.emit(laurent_output(m), m.to_string());
    return 0;
  });

  // polytope
  auto* poly_cmd = app.add_subcommand("polytope", "Lattice polytope operations");
  poly_cmd->require_subcommand(1);
  auto* p_hull = poly_cmd->add_subcommand("hull", "Vertices and facet inequalities");
  leaf(p_hull, [&](const Printer& p) {
    const LatticePolytope P = polytope_from_json(input_json(g), g.input + ": $");
    Json j = polytope_to_json(P);
    Json facets = Json::array();
    std::vector<std::string> lines;
    for (const auto& v : P.vertices()) lines.push_back("vertex " + vec_text(v));
    for (const auto& f : P.facets()) {
      facets.push_back(Json{{"normal", f.normal}, {"offset", f.offset}});
      lines.push_back(P.facet_string(f));
    }
    j["facets"] = facets;
    p.emit(j, join(lines, "\n"));
    return 0;
  });
  auto* p_dual = poly_cmd->add_subcommand("dual", "Polar dual");
  leaf(p_dual, [&](const Printer& p) {
    const RationalPolytope d = dual(polytope_from_json(input_json(g), g.input + ": $"));
    std::vector<std::string> lines;
    for (const auto& v : d.vertices) lines.push_back(qvec_text(v));
    p.emit(rational_polytope_to_json(d), join(lines, "\n"));
    return 0;
  });
  auto* p_refl = poly_cmd->add_subcommand("reflexive", "Reflexivity test");
  leaf(p_refl, [&](const Printer& p) {
    const bool r = is_reflexive(polytope_from_json(input_json(g), g.input + ": $"));
    p.emit(Json{{"reflexive", r}}, r ? "true" : "false");
    return 0;
  });
  auto* p_vol = poly_cmd->add_subcommand("volume", "Normalized volume");
  leaf(p_vol, [&](const Printer& p) {
    const Z v = normalized_volume(polytope_from_json(input_json(g), g.input + ": $"));
    p.emit(Json{{"normalized_volume", to_string(v)}}, to_string(v));
    return 0;
  });
  std::string region = "all";
  auto* p_pts = poly_cmd->add_subcommand("points", "Lattice points");
  p_pts->add_option("--region", region)->check(CLI::IsMember({"all", "boundary", "interior"}));
  leaf(p_pts, [&](const Printer& p) {
    const PointRegion r =
        region == "boundary" ? PointRegion::Boundary : region == "interior" ? PointRegion::Interior : PointRegion::All;
    const auto pts = lattice_points(polytope_from_json(input_json(g), g.input + ": $"), r);
    p.emit(Json{{"count", pts.size()}, {"points", pts}}, std::to_string(pts.size()) + "\n" + matrix_text(pts));
    return 0;
  });
  std::string other_path;
  auto* p_eq = poly_cmd->add_subcommand("equiv", "Unimodular equivalence");
  p_eq->add_option("--other", other_path, "Second polytope JSON")->required();
  leaf(p_eq, [&](const Printer& p) {
    const auto m = unimodular_equivalent(polytope_from_json(input_json(g), g.input + ": $"), read_polytope(other_path));
    Json j{{"equivalent", m.has_value()}};
    if (m) j["matrix"] = *m;
    p.emit(j, m ? "true\n" + matrix_text(*m) : "false");
    return 0;
  });

  // lattice
  auto* lat_cmd = app.add_subcommand("lattice", "Integral lattices");
  lat_cmd->require_subcommand(1);
  std::string lat_name;
  auto* l_disc = lat_cmd->add_subcommand("disc", "Discriminant group and form");
  l_disc->add_option("--name", lat_name, "H, A<n>, D<n>, E6..E8, <m>, M, M_<n>");
  leaf(l_disc, [&](const Printer& p) {
    const GramLattice l = lattice_input(g, lat_name);
    const DiscriminantData d = discriminant(l);
    Json group = Json::array(), forms = Json::array(), gens = Json::array();
    std::vector<std::string> parts;
    for (size_t i = 0; i < d.group.size(); ++i) {
      group.push_back(to_string(d.group[i]));
      forms.push_back(to_string(d.form_values[i]));
      Json gv = Json::array();
      for (const auto& c : d.generators[i]) gv.push_back(to_string(c));
      gens.push_back(gv);
      parts.push_back("Z/" + to_string(d.group[i]) + " q=" + to_string(d.form_values[i]));
    }
    const Z det = lattice_determinant(l);
    p.emit(Json{{"determinant", to_string(det)}, {"group", group}, {"form_values", forms}, {"generators", gens}},
           "det " + to_string(det) + "\n" + (parts.empty() ? std::string("trivial") : join(parts, ", ")));
    return 0;
  });
  auto* l_sig = lat_cmd->add_subcommand("sig", "Signature");
  l_sig->add_option("--name", lat_name);
  leaf(l_sig, [&](const Printer& p) {
    const auto [plus, minus] = signature(lattice_input(g, lat_name));
    p.emit(Json{{"positive", plus}, {"negative", minus}}, "(" + std::to_string(plus) + "," + std::to_string(minus) + ")");
    return 0;
  });
  auto* l_index = lat_cmd->add_subcommand(
      "index", "Index of a sublattice given {\"sub\":gram,\"sup\":gram,\"embedding\":rows}");
  leaf(l_index, [&](const Printer& p) {
    const Json j = input_json(g);
    const std::string w = g.input + ": $";
    if (!j.is_object() || !j.contains("sub") || !j.contains("sup") || !j.contains("embedding")) {
      fail("ParseError", w + ": expected fields sub, sup and embedding");
    }
    const Z idx = index_check(gram_from_json(j["sub"], w + ".sub"), gram_from_json(j["sup"], w + ".sup"),
                              int_matrix_from_json(j["embedding"], w + ".embedding"));
    p.emit(Json{{"index", to_string(idx)}}, to_string(idx));
    return 0;
  });
  std::string dv_type = "A";
  int dv_n = 1, dv_k = 1, dv_r = 0;
  bool dv_second = false;
  auto* l_dv = lat_cmd->add_subcommand("duval", "Local intersection numbers at a du Val point");
  l_dv->add_option("--type", dv_type)->check(CLI::IsMember({"A", "D", "E"}));
  l_dv->add_option("--n", dv_n);
  l_dv->add_option("--k", dv_k);
  l_dv->add_option("--r", dv_r, "Second curve index; omitted for the self-intersection correction");
  l_dv->add_flag("--second-branch", dv_second);
  leaf(l_dv, [&](const Printer& p) {
    const DuValPoint pt{dv_type[0], dv_n};
    const Q v = dv_r > 0 ? duval_intersection(pt, dv_k, dv_r) : duval_self_intersection(pt, dv_k, dv_second);
    p.emit(Json{{"value", to_string(v)}}, to_string(v));
    return 0;
  });

  // pf
  auto* pf_cmd = app.add_subcommand("pf", "Picard-Fuchs operators");
  pf_cmd->require_subcommand(1);
  int max_order = 4, max_degree = 24, min_order = 0;
  unsigned margin = 10;
  auto* pf_fit = pf_cmd->add_subcommand("fit", "Guess an annihilating operator");
  pf_fit->add_option("--max-order", max_order);
  pf_fit->add_option("--max-degree", max_degree);
  pf_fit->add_option("--min-order", min_order);
  pf_fit->add_option("--margin", margin, "Coefficients held back for verification");
  leaf(pf_fit, [&](const Printer& p) {
    const PowerSeries s = series_from_json(input_json(g), g.input + ": $");
    FitOptions opt;
    opt.margin = margin;
    opt.min_order = min_order;
    const auto op = fit(s, max_order, max_degree, opt);
    if (!op) fail("NoOperator", "no operator within the search bounds");
    Json j = operator_to_json(*op);
    j["text"] = op->to_string();
    p.emit(j, op->to_string());
    return 0;
  });

  // hodge
  auto* h_cmd = app.add_subcommand("hodge", "Hodge-number bookkeeping");
  h_cmd->require_subcommand(1);
  int surf_d = 0;
  auto* h_surf = h_cmd->add_subcommand("surface", "Numbers for a del Pezzo surface of degree d");
  h_surf->add_option("--d", surf_d)->required();
  leaf(h_surf, [&](const Printer& p) {
    const SurfaceHodge s = kkp_surface_numbers(surf_d);
    Json j{{"degree", s.degree},         {"fano_type", s.fano_type}, {"relative_h2", s.relative_h2},
           {"jordan_blocks", s.jordan_blocks}, {"f", diamond_json(s.f)},   {"h", diamond_json(s.h)}};
    std::vector<std::string> jb;
    for (int b : s.jordan_blocks) jb.push_back(std::to_string(b));
    p.emit(j, "f:\n" + diamond_text(s.f) + "\nh:\n" + diamond_text(s.h) + "\nfano_type " +
                  (s.fano_type ? "true" : "false") + "\njordan " + join(jb, ","));
    return 0;
  });
  long long ky = 0, ph = 2, h12z = 0, h21z = 0;
  auto* h_three = h_cmd->add_subcommand("threefold", "Diamond from k_Y, ph and the Hodge numbers of Z");
  h_three->add_option("--ky", ky)->required();
  h_three->add_option("--ph", ph)->required();
  h_three->add_option("--h12z", h12z);
  h_three->add_option("--h21z", h21z);
  leaf(h_three, [&](const Printer& p) {
    const HodgeDiamond d = harder_diamond(ky, ph, h12z, h21z);
    p.emit(diamond_json(d), diamond_text(d));
    return 0;
  });
  auto* h_comp = h_cmd->add_subcommand("components", "Components of the fiber at infinity");
  leaf(h_comp, [&](const Printer& p) {
    const long long c = components_at_infinity(polytope_from_json(input_json(g), g.input + ": $"));
    p.emit(Json{{"components", c}}, std::to_string(c));
    return 0;
  });
  int k_index = 1;
  auto* h_km = h_cmd->add_subcommand("kmatrix", "The matrix M_{d;i} and its component count");
  h_km->add_option("--degrees", degrees)->delimiter(',');
  h_km->add_option("--index", k_index)->required();
  leaf(h_km, [&](const Printer& p) {
    const IMat m = k_matrix(degrees, k_index);
    const long long c = k_components(degrees, k_index);
    p.emit(Json{{"matrix", m}, {"components", c}}, matrix_text(m) + "\ncomponents " + std::to_string(c));
    return 0;
  });

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "Bundled model catalog");
  cat_cmd->require_subcommand(1);
  std::string cat_path, cat_id;
  auto* c_verify = cat_cmd->add_subcommand("verify", "Verify every entry (or one id)");
  c_verify->add_option("--id", cat_id);
  c_verify->add_option("--catalog", cat_path, "Catalog file (default: TLG_CATALOG or the bundled file)");
  leaf(c_verify, [&](const Printer& p) {
    auto entries = load_catalog(cat_path.empty() ? default_catalog_path() : cat_path);
    if (!cat_id.empty()) {
      std::erase_if(entries, [&](const CatalogEntry& e) { return e.id != cat_id; });
      if (entries.empty()) fail("UnknownId", "no catalog entry with id " + cat_id);
    }
    const CatalogSummary s = verify_all(entries, order_or(g, 4), g.jobs);
    std::vector<std::string> lines;
    for (const auto& r : s.entries) {
      std::string line = std::string(r.pass() ? "PASS " : "FAIL ") + r.id + " [" + r.anchor + "-anchored] " +
                         r.series_source + " " + std::to_string(r.period.compared) + " coefficients";
      for (const auto& f : r.failures) line += "\n  " + f;
      lines.push_back(line);
    }
    lines.push_back(std::to_string(s.passed) + " passed, " + std::to_string(s.failed) + " failed");
    p.emit(summary_to_json(s), join(lines, "\n"));
    return s.all_pass() ? 0 : 1;
  });
  auto* c_list = cat_cmd->add_subcommand("list", "List entries");
  c_list->add_option("--catalog", cat_path);
  leaf(c_list, [&](const Printer& p) {
    const auto entries = load_catalog(cat_path.empty() ? default_catalog_path() : cat_path);
    Json j = Json::array();
    std::vector<std::string> lines;
    for (const auto& e : entries) {
      j.push_back(Json{{"id", e.id}, {"description", e.description}, {"anchor", e.anchor()}});
      lines.push_back(e.id + "  [" + e.anchor() + "]  " + e.description);
    }
    p.emit(j, join(lines, "\n"));
    return 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Printer printer{out, g.output == "json"};
  try {
    if (!action) throw UsageError("no command selected");
    return action(printer);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << dump(Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    out << dump(Json{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}});
    return 1;
  }
}

}  // namespace tlg::cli
