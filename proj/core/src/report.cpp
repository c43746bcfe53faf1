#include "cy3/report.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#ifndef CY3LAB_DATA_DIR
#define CY3LAB_DATA_DIR "data"
#endif

namespace cy3 {

using ordered_json = nlohmann::ordered_json;

Task task_from_string(const std::string& s) {
  if (s == "normalizer") return Task::Normalizer;
  if (s == "picard") return Task::Picard;
  if (s == "hodge") return Task::Hodge;
  if (s == "pi1") return Task::Pi1;
  if (s == "toric") return Task::Toric;
  if (s == "modular") return Task::Modular;
  throw Error("unknown task \"" + s + "\"");
}

const char* to_string(Task t) {
  switch (t) {
    case Task::Normalizer: return "normalizer";
    case Task::Picard: return "picard";
    case Task::Hodge: return "hodge";
    case Task::Pi1: return "pi1";
    case Task::Toric: return "toric";
    case Task::Modular: return "modular";
  }
  return "?";
}

std::vector<CatalogEntry> load_default_catalog(const std::string& override_path) {
  std::string path = override_path.empty()
                         ? std::string(CY3LAB_DATA_DIR) + "/catalog.txt"
                         : override_path;
  return load_catalog_file(path);
}

std::vector<std::string> h21_three_labels(const std::vector<CatalogEntry>& cat) {
  std::vector<std::string> out;
  for (const auto& e : cat)
    if (e.expected_h21 == 3) out.push_back(e.label.str());
  return out;
}

namespace {

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15e", x);
  return buf;
}

const char* l0_tag_name(L0Tag t) {
  switch (t) {
    case L0Tag::Full: return "full";
    case L0Tag::BorelCube: return "borelCube";
    case L0Tag::BorelTilde: return "borelTilde";
    case L0Tag::Diagonal: return "diagonal";
    case L0Tag::MixedPair: return "mixedPair";
    case L0Tag::Case41: return "case41";
    case L0Tag::Raw: return "raw";
  }
  return "?";
}

// Named L0 references for the ten h21 = 3 rows.
struct NamedL0 {
  const char* label;
  const char* description;
};

bool l0_matches_named(const std::string& label, const L0Descriptor& d,
                      std::string* expected_text) {
  auto expect = [&](const std::vector<L0Element>& ref, const char* txt) {
    *expected_text = txt;
    return d.elements.size() == ref.size() &&
           std::equal(ref.begin(), ref.end(), d.elements.begin());
  };
  if (label == "0-1") return expect(l0_full(), "S^3 x| S3");
  if (label == "0-4" || label == "2-9") return expect(l0_borel_cube(1), "B1^3 x| S3");
  if (label == "1-1") return expect(l0_borel_cube(2), "B2^3 x| S3");
  if (label == "1-5") return expect(l0_borel_tilde(2), "B2~ x| S3");
  if (label == "1-11")
    return expect(l0_slot_product({2, 2, 1}, 1), "(B2 x B2 x B1) x| <(1 2)>");
  if (label == "2-1") return expect(l0_diagonal(), "S x| S3 (diagonal)");
  if (label == "2-12")
    return expect(l0_slot_product({0, 1, 1}, 3), "(1 x B1 x B1) x| <(2 3)>");
  if (label == "3-5") return expect(l0_borel_tilde(1), "B1~ x| S3");
  if (label == "4-1") {
    *expected_text = "non-split extension of S3 by <(t,s,r),(s,r,t),(r,t,s)>";
    return check_case41(d).all();
  }
  *expected_text = "";
  return true;  // no golden reference outside the ten rows
}

ordered_json normalizer_json(const NormalizerResult& r) {
  ordered_json j;
  j["label"] = r.label.str();
  j["Lorder"] = r.l_order;
  j["L0order"] = r.l0.order();
  j["L0tag"] = l0_tag_name(r.l0.tag);
  j["L0text"] = r.l0.tag_text;
  ordered_json gens = ordered_json::array();
  for (auto g : r.l0.generators) gens.push_back(l0_render(g));
  j["L0generators"] = gens;
  j["translationKernelOrder"] = r.l0.translation_kernel.size();
  return j;
}

ordered_json picard_json(const PicardResult& r) {
  ordered_json j;
  j["label"] = r.label.str();
  j["rankQ"] = r.rank_q;
  j["dimF5"] = r.dim_f5;
  j["dimF7"] = r.dim_f7;
  ordered_json basis = ordered_json::array();
  for (const auto& vec : r.basis_q) {
    ordered_json v = ordered_json::array();
    for (const auto& x : vec) v.push_back(x.str());
    basis.push_back(v);
  }
  j["invariantBasis"] = basis;
  j["conclusion"] = r.conclusion;
  return j;
}

ordered_json geometry_json(const GeometryResult& r) {
  ordered_json j;
  j["label"] = r.label.str();
  j["free"] = r.free_action;
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json cj;
    cj["direction"] = c.direction + 1;
    cj["orbitSize"] = c.orbit.size();
    cj["genus"] = c.genus;
    classes.push_back(cj);
  }
  j["curveClasses"] = classes;
  j["tridents"] = r.tridents.tridents;
  j["resolutionChoicesUpperBound"] = r.tridents.resolution_choices;
  j["h11"] = r.hodge.h11;
  j["h21"] = r.hodge.h21;
  j["pi1"] = to_string(r.pi1);
  j["matchesTable3"] = r.matches_catalog;
  return j;
}

ordered_json toric_json(const ToricResult& r) {
  ordered_json j;
  ordered_json ts = ordered_json::array();
  for (const auto& res : r.resolutions) {
    ordered_json tj;
    ordered_json triangles = ordered_json::array();
    for (const auto& t : res.triangulation.triangles) {
      ordered_json tri = ordered_json::array();
      for (const auto& p : t.v) tri.push_back({p[0], p[1]});
      triangles.push_back(tri);
    }
    tj["triangles"] = triangles;
    ordered_json charts = ordered_json::array();
    for (const auto& c : res.charts) {
      ordered_json cj;
      ordered_json gens = ordered_json::array();
      for (const auto& g : c.generators) gens.push_back(g.name);
      cj["generators"] = gens;
      charts.push_back(cj);
    }
    tj["charts"] = charts;
    ordered_json glue = ordered_json::array();
    for (const auto& g : res.gluings) {
      ordered_json gj;
      gj["charts"] = {g.chart_a, g.chart_b};
      gj["unit"] = g.unit_a.name + " * " + g.unit_b.name + " = 1";
      glue.push_back(gj);
    }
    tj["gluings"] = glue;
    tj["isCentral"] = res.triangulation.is_central;
    ts.push_back(tj);
  }
  j["triangulations"] = ts;
  ordered_json edges = ordered_json::array();
  for (const auto& e : r.graph.edges) edges.push_back({e[0], e[1]});
  j["flopGraph"] = edges;
  j["flopHub"] = r.graph.hub;
  ordered_json hb = ordered_json::array();
  for (const auto& u : r.singularity.hilbert_basis) hb.push_back({u[0], u[1], u[2]});
  j["hilbertBasis"] = hb;
  j["relationABCeqD2"] = r.singularity.relation_holds;
  j["exceptionalDivisors"] = r.exceptional_divisors;
  return j;
}

ordered_json modular_json(const ModularReport& r) {
  ordered_json j;
  j["samples"] = r.config.samples;
  j["seed"] = r.config.seed;
  j["tol"] = fixed(r.config.tol);
  j["maxDeltaResidual"] = fixed(r.max_delta_residual);
  j["maxSectionResidual"] = fixed(r.max_section_residual);
  j["maxPotentialInvarianceResidual"] = fixed(r.max_potential_invariance_residual);
  ordered_json mc;
  mc["maxRelError"] = fixed(r.metric_max_rel_error);
  mc["minEigenvalue"] = fixed(r.metric_min_eigenvalue);
  j["metricChecks"] = mc;
  j["etaAtIError"] = fixed(r.eta_i_abs_error);
  j["minAbsDelta"] = fixed(r.min_abs_delta);
  ordered_json orders;
  for (const auto& [k, v] : r.multiplier_orders)
    orders[std::to_string(k)] = v;
  j["multiplierOrders"] = orders;
  j["epsilon12IsPlusMinus1"] = r.epsilon12_pm1;
  return j;
}

}  // namespace

RunReport run_report(const RunConfig& config) {
  RunReport rep;
  rep.config = config;
  auto catalog = load_default_catalog(config.catalog_path);

  std::vector<const CatalogEntry*> selected;
  if (config.cases.empty()) {
    for (const auto& e : catalog) selected.push_back(&e);
  } else {
    for (const auto& c : config.cases) {
      const CatalogEntry* e = find_case(catalog, c);
      if (!e) throw Error("unknown case label \"" + c + "\"");
      selected.push_back(e);
    }
  }
  if (config.tasks.count(Task::Picard))
    for (const auto* e : selected)
      if (e->expected_h21 != 3)
        throw Error("picard task requested for case " + e->label.str() +
                    " with h21 != 3");

  // Per-case work, dispatched to a pool and merged in selection order.
  auto work = [&](const CatalogEntry* e) {
    CaseReport cr;
    cr.label = e->label;
    if (config.tasks.count(Task::Normalizer) || config.tasks.count(Task::Picard))
      cr.normalizer = run_normalizer(*e);
    if (config.tasks.count(Task::Picard))
      cr.picard = picard_rank(*e, cr.normalizer->l0);
    if (config.tasks.count(Task::Hodge) || config.tasks.count(Task::Pi1))
      cr.geometry = run_geometry(*e);
    return cr;
  };
  std::vector<std::future<CaseReport>> futures;
  for (const auto* e : selected)
    futures.push_back(std::async(std::launch::async, work, e));
  for (auto& f : futures) rep.cases.push_back(f.get());

  if (config.tasks.count(Task::Toric)) rep.toric = run_toric();
  if (config.tasks.count(Task::Modular)) {
    ModularConfig mc;
    mc.samples = config.samples;
    mc.seed = config.seed;
    mc.tol = config.tol;
    rep.modular = run_modular(mc);
  }

  // Golden comparisons.
  for (const auto& cr : rep.cases) {
    const CatalogEntry* e = find_case(catalog, cr.label.str());
    if (cr.geometry) {
      if (config.tasks.count(Task::Hodge) &&
          (cr.geometry->hodge.h11 != e->expected_h11 ||
           cr.geometry->hodge.h21 != e->expected_h21))
        rep.mismatches.push_back(
            "case " + cr.label.str() + ": hodge (" +
            std::to_string(cr.geometry->hodge.h11) + "," +
            std::to_string(cr.geometry->hodge.h21) + ") != expected (" +
            std::to_string(e->expected_h11) + "," +
            std::to_string(e->expected_h21) + ")");
      if (config.tasks.count(Task::Pi1) && cr.geometry->pi1 != e->expected_pi1)
        rep.mismatches.push_back("case " + cr.label.str() + ": pi1 " +
                                 to_string(cr.geometry->pi1) + " != expected " +
                                 to_string(e->expected_pi1));
    }
    if (cr.normalizer && e->expected_h21 == 3) {
      std::string expected_text;
      if (!l0_matches_named(cr.label.str(), cr.normalizer->l0, &expected_text))
        rep.mismatches.push_back("case " + cr.label.str() + ": L0 " +
                                 cr.normalizer->l0.tag_text + " != expected " +
                                 expected_text);
    }
    if (cr.picard) {
      static const std::map<std::string, int> expected_rank = {
          {"0-1", 0}, {"0-4", 1}, {"1-1", 1},  {"1-5", 1}, {"1-11", 2},
          {"2-1", 1}, {"2-9", 1}, {"2-12", 3}, {"3-5", 1}, {"4-1", 1}};
      auto it = expected_rank.find(cr.label.str());
      if (it != expected_rank.end() && cr.picard->rank_q != it->second)
        rep.mismatches.push_back("case " + cr.label.str() + ": picard rank " +
                                 std::to_string(cr.picard->rank_q) +
                                 " != expected " + std::to_string(it->second));
    }
  }
  return rep;
}

std::string report_to_json(const RunReport& r) {
  ordered_json j;
  j["schema"] = "cy3lab/1";
  ordered_json cfg;
  ordered_json cases = ordered_json::array();
  for (const auto& c : r.config.cases) cases.push_back(c);
  cfg["cases"] = cases;
  ordered_json tasks = ordered_json::array();
  for (auto t : r.config.tasks) tasks.push_back(to_string(t));
  cfg["tasks"] = tasks;
  cfg["tol"] = fixed(r.config.tol);
  cfg["samples"] = r.config.samples;
  cfg["seed"] = r.config.seed;
  j["config"] = cfg;

  ordered_json jcases = ordered_json::array();
  for (const auto& c : r.cases) {
    ordered_json cj;
    cj["label"] = c.label.str();
    if (c.normalizer) cj["normalizer"] = normalizer_json(*c.normalizer);
    if (c.picard) cj["picard"] = picard_json(*c.picard);
    if (c.geometry) cj["geometry"] = geometry_json(*c.geometry);
    jcases.push_back(cj);
  }
  j["cases"] = jcases;
  if (r.toric) j["toric"] = toric_json(*r.toric);
  if (r.modular) j["modular"] = modular_json(*r.modular);
  ordered_json mism = ordered_json::array();
  for (const auto& m : r.mismatches) mism.push_back(m);
  j["mismatches"] = mism;
  j["allMatched"] = r.all_matched();
  return j.dump(2) + "\n";
}

namespace {

std::string md_escape(std::string s) {
  for (auto& ch : s)
    if (ch == '|') ch = '/';
  return s;
}

}  // namespace

std::string markdown_table1(const RunReport& r) {
  std::ostringstream os;
  os << "| Case | L0 | order | translation classes | matches |\n";
  os << "|------|----|-------|---------------------|---------|\n";
  for (const auto& c : r.cases) {
    if (!c.normalizer) continue;
    const auto& n = *c.normalizer;
    std::string expected;
    l0_matches_named(c.label.str(), n.l0, &expected);
    std::string match = expected.empty() ? "-" : "yes";
    for (const auto& m : r.mismatches)
      if (m.find("case " + c.label.str() + ": L0") == 0) match = "NO";
    os << "| (" << c.label.str() << ") | " << md_escape(n.l0.tag_text) << " | "
       << n.l0.order() << " | " << n.l0.translation_kernel.size() << " | "
       << match << " |\n";
  }
  return os.str();
}

std::string markdown_table2(const RunReport& r) {
  std::ostringstream os;
  os << "| Case | rank over Q | dim over F5 | dim over F7 |\n";
  os << "|------|-------------|-------------|-------------|\n";
  for (const auto& c : r.cases) {
    if (!c.picard) continue;
    os << "| (" << c.label.str() << ") | " << c.picard->rank_q << " | "
       << c.picard->dim_f5 << " | " << c.picard->dim_f7 << " |\n";
  }
  return os.str();
}

std::string markdown_table3(const RunReport& r) {
  std::ostringstream os;
  os << "| Label | (h11, h21) | pi1 | matches |\n";
  os << "|-------|------------|-----|---------|\n";
  for (const auto& c : r.cases) {
    if (!c.geometry) continue;
    const auto& g = *c.geometry;
    os << "| (" << c.label.str() << ") | (" << g.hodge.h11 << ", " << g.hodge.h21
       << ") | " << to_string(g.pi1) << " | "
       << (g.matches_catalog ? "yes" : "NO") << " |\n";
  }
  return os.str();
}

std::string report_to_markdown(const RunReport& r) {
  std::ostringstream os;
  os << "# cy3lab report\n\n";
  bool any_norm = false, any_pic = false, any_geo = false;
  for (const auto& c : r.cases) {
    any_norm |= c.normalizer.has_value();
    any_pic |= c.picard.has_value();
    any_geo |= c.geometry.has_value();
  }
  if (any_norm) os << "## Ambient symmetry classes (Table 1)\n\n"
                   << markdown_table1(r) << "\n";
  if (any_pic) os << "## Picard ranks (Table 2)\n\n" << markdown_table2(r) << "\n";
  if (any_geo) os << "## Hodge numbers and fundamental groups (Table 3)\n\n"
                  << markdown_table3(r) << "\n";
  if (r.toric) {
    os << "## Local crepant resolutions\n\n";
    os << "- triangulations: " << r.toric->resolutions.size() << "\n";
    os << "- flop graph edges:";
    for (const auto& e : r.toric->graph.edges)
      os << " (" << e[0] << "," << e[1] << ")";
    os << "\n- hub: " << r.toric->graph.hub << " (central)\n\n";
  }
  if (r.modular) {
    os << "## Modular certification\n\n";
    os << "- max weight-12 residual: " << fixed(r.modular->max_delta_residual) << "\n";
    os << "- max section residual: " << fixed(r.modular->max_section_residual) << "\n";
    os << "- max potential invariance residual: "
       << fixed(r.modular->max_potential_invariance_residual) << "\n";
    os << "- metric max rel error: " << fixed(r.modular->metric_max_rel_error)
       << "\n";
    os << "- metric min eigenvalue: " << fixed(r.modular->metric_min_eigenvalue)
       << "\n\n";
  }
  os << "## Summary\n\n";
  if (r.all_matched()) {
    os << "All golden comparisons passed.\n";
  } else {
    os << "Mismatches:\n\n";
    for (const auto& m : r.mismatches) os << "- " << m << "\n";
  }
  return os.str();
}

}  // namespace cy3
