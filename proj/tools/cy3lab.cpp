// cy3lab: reproducibility front end.
//
//   cy3lab report --cases 0-1,2-9 --tasks normalizer,picard,hodge,pi1
//   cy3lab verify
//
// Exit codes: 0 pass, 1 golden mismatch or failed criterion, 2 usage error,
// 3 internal failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cy3/acceptance.hpp"
#include "cy3/report.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw cy3::Error("cannot write output file: " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and certified computations for the torus-quotient case catalog"};
  app.require_subcommand(1);

  std::string cases_arg = "all";
  std::string tasks_arg = "normalizer,picard,hodge,pi1,toric,modular";
  double tol = 1e-12;
  int samples = 100;
  std::uint64_t seed = 2026;
  std::string out_path;
  std::string format = "json";
  std::string catalog_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cases", cases_arg, "comma-separated case labels or \"all\"");
    cmd->add_option("--tol", tol, "numerical tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", samples, "sample count for certification runs")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--catalog", catalog_path, "catalog file override");
  };

  CLI::App* report_cmd = app.add_subcommand("report", "run computations and emit a report");
  add_common(report_cmd);
  report_cmd->add_option("--tasks", tasks_arg,
                         "subset of normalizer,picard,hodge,pi1,toric,modular");
  report_cmd->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (report_cmd->parsed()) {
      cy3::RunConfig cfg;
      if (cases_arg != "all") cfg.cases = split_commas(cases_arg);
      for (const auto& t : split_commas(tasks_arg))
        cfg.tasks.insert(cy3::task_from_string(t));
      cfg.tol = tol;
      cfg.samples = samples;
      cfg.seed = seed;
      cfg.out = out_path;
      cfg.format = format;
      cfg.catalog_path = catalog_path;

      // Picard only applies to the h21 = 3 rows; when running "all", restrict
      // the task instead of failing.
      if (cfg.tasks.count(cy3::Task::Picard) && cfg.cases.empty()) {
        auto catalog = cy3::load_default_catalog(cfg.catalog_path);
        cy3::RunConfig pic_cfg = cfg;
        pic_cfg.cases = cy3::h21_three_labels(catalog);
        pic_cfg.tasks = {cy3::Task::Normalizer, cy3::Task::Picard};
        cfg.tasks.erase(cy3::Task::Picard);
        cy3::RunReport pic = cy3::run_report(pic_cfg);
        cy3::RunReport rest = cy3::run_report(cfg);
        // merge picard fragments into the full-case report
        for (auto& c : rest.cases)
          for (const auto& p : pic.cases)
            if (p.label == c.label) {
              c.picard = p.picard;
              if (!c.normalizer) c.normalizer = p.normalizer;
            }
        for (const auto& m : pic.mismatches) rest.mismatches.push_back(m);
        write_out(out_path, format == "json" ? cy3::report_to_json(rest)
                                             : cy3::report_to_markdown(rest));
        return rest.all_matched() ? 0 : 1;
      }

      cy3::RunReport rep = cy3::run_report(cfg);
      write_out(out_path, format == "json" ? cy3::report_to_json(rep)
                                           : cy3::report_to_markdown(rep));
      return rep.all_matched() ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      cy3::AcceptanceConfig cfg;
      cfg.catalog_path = catalog_path;
      cfg.tol = tol;
      cfg.samples = samples;
      cfg.seed = seed;
      bool ok = true;
      auto rs = cy3::run_acceptance(cfg, [&](const cy3::CriterionResult& r) {
        std::printf("[%2d] %s  %s (%.2fs)%s%s\n", r.number,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::fflush(stdout);
        ok &= r.passed;
      });
      std::printf("%zu/%zu criteria passed\n",
                  (size_t)std::count_if(rs.begin(), rs.end(),
                                        [](const auto& r) { return r.passed; }),
                  rs.size());
      return ok ? 0 : 1;
    }
  } catch (const cy3::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const cy3::Error& e) {
    std::string msg = e.what();
    std::fprintf(stderr, "error: %s\n", msg.c_str());
    // configuration-level problems are usage errors
    if (msg.find("unknown case label") != std::string::npos ||
        msg.find("unknown task") != std::string::npos ||
        msg.find("h21 != 3") != std::string::npos ||
        msg.find("cannot open catalog") != std::string::npos)
      return 2;
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal failure: %s\n", e.what());
    return 3;
  }
  return 2;
}
