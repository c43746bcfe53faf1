#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cy3/catalog.hpp"
#include "cy3/cohomology.hpp"
#include "cy3/geometry.hpp"
#include "cy3/modular.hpp"
#include "cy3/normalizer.hpp"
#include "cy3/toric.hpp"

namespace cy3 {

enum class Task { Normalizer, Picard, Hodge, Pi1, Toric, Modular };

Task task_from_string(const std::string& s);  // throws on unknown
const char* to_string(Task t);

struct RunConfig {
  std::vector<std::string> cases;  // empty = all
  std::set<Task> tasks;
  double tol = 1e-12;
  int samples = 100;
  std::uint64_t seed = 2026;
  std::string out;                 // empty = stdout
  std::string format = "json";     // json | markdown
  std::string catalog_path;        // empty = compiled-in default
};

struct CaseReport {
  Label label;
  std::optional<NormalizerResult> normalizer;
  std::optional<PicardResult> picard;
  std::optional<GeometryResult> geometry;  // hodge and/or pi1
};

struct RunReport {
  RunConfig config;
  std::vector<CaseReport> cases;
  std::optional<ToricResult> toric;
  std::optional<ModularReport> modular;
  std::vector<std::string> mismatches;  // golden comparisons that failed
  bool all_matched() const { return mismatches.empty(); }
};

// Executes the requested tasks case by case (worker pool, deterministic
// merge) and compares computed values against the catalog's golden columns.
RunReport run_report(const RunConfig& config);

// Deterministic serializations: repeated runs with one config are
// byte-identical.
std::string report_to_json(const RunReport& r);
std::string report_to_markdown(const RunReport& r);

// The three tables on their own (markdown), regenerated from a report that
// covered the needed tasks.
std::string markdown_table1(const RunReport& r);
std::string markdown_table2(const RunReport& r);
std::string markdown_table3(const RunReport& r);

std::vector<CatalogEntry> load_default_catalog(const std::string& override_path);

// Labels of the ten cases with h21 = 3, in catalog order.
std::vector<std::string> h21_three_labels(const std::vector<CatalogEntry>& cat);

}  // namespace cy3
