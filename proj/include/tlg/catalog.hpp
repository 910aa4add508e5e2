// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlg/json_io.hpp"
#include "tlg/laurent.hpp"
#include "tlg/polytope.hpp"
#include "tlg/series.hpp"

namespace tlg {

enum class GeneratorKind { None, Wci, Grass, Toric };

struct CatalogGenerator {
  GeneratorKind kind = GeneratorKind::None;
  WciSpec wci;
  GrassSpec grass;
  ToricCurveData toric;
};

// Stored series prefix; provenance is "paper" or "derived-regression".
struct SeriesPrefix {
  PowerSeries series;
  std::string provenance;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  LaurentPoly laurent;
  CatalogGenerator generator;
  std::optional<SeriesPrefix> expected_series_prefix;
  std::optional<std::vector<IVec>> polytope_notes;  // expected vertices of dual(N(f))
  std::optional<long long> degree;
  std::optional<int> index;
  std::optional<int> rho;
  bool check_minkowski = false;

  // "paper" when a generator or a paper prefix anchors the period, else
  // "regression".
  std::string anchor() const;
};

Json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j, const std::string& where);

// A JSON array of entries; ids must be unique. ParseError with the JSON
// location on malformed content.
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> catalog_from_json(const Json& j, const std::string& where = "$");
Json catalog_to_json(const std::vector<CatalogEntry>& entries);
void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path);

// TLG_CATALOG when set, else the bundled data file.
std::string default_catalog_path();

struct EntryReport {
  std::string id;
  std::string anchor;
  std::string series_source;  // "wci", "grass", "toric", "prefix" or "none"
  PeriodReport period;
  std::optional<bool> reflexive;          // unset when N(f) is not full-dimensional
  std::optional<Z> computed_degree;       // normalized_volume(dual(N(f))) when reflexive
  std::optional<bool> polytope_notes_ok;  // unset when no notes are stored
  std::optional<bool> minkowski_ok;       // unset unless flagged
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Never throws for a malformed entry; every failure goes into the report.
EntryReport verify_entry(const CatalogEntry& e, unsigned order, const KernelOptions& options = {});

struct CatalogSummary {
  std::vector<EntryReport> entries;  // natural id order
  size_t passed = 0;
  size_t failed = 0;
  bool all_pass() const { return failed == 0; }
};

// Entries are verified independently, `jobs` at a time (0 uses the OpenMP
// default); the summary does not depend on jobs.
CatalogSummary verify_all(const std::vector<CatalogEntry>& entries, unsigned order, int jobs = 1);

// Natural order: digit runs compare numerically ("1-2" < "1-10").
bool natural_less(const std::string& a, const std::string& b);

Json report_to_json(const EntryReport& r);
Json summary_to_json(const CatalogSummary& s);

}  // namespace tlg
