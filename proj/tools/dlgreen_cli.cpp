// Command-line driver: build the tables for one (q, r), run the selected
// identity checks, and write the JSON report.  Exit status is nonzero iff
// any check fails.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "dlgreen/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification of higher Deligne-Lusztig character identities for GL2 over "
               "F_q[t]/t^r"};

  dlgreen::ExperimentConfig cfg;
  std::string torus = "both";
  std::vector<std::string> checks;
  std::string config_path;
  bool dump_flag = false;
  std::string dump_dir = "tables";

  app.add_option("--q", cfg.q, "residue field size (prime power)");
  app.add_option("--r", cfg.r, "ring level; 1 or even");
  app.add_option("--torus", torus, "split, nonsplit, or both")
      ->check(CLI::IsMember({"split", "nonsplit", "both"}));
  app.add_option("--check", checks,
                 "checks to run (repeatable); 'all' or a subset of: summation, integrality, "
                 "char_formula, regular_ss, product_property, inner_product, gamma, "
                 "level_one_coincidence, classical_orthogonality")
      ->delimiter(',');
  app.add_option("--out", cfg.out_path, "write the JSON report here");
  app.add_option("--cache", cfg.cache_dir, "cache directory for character tables");
  app.add_option("--jobs", cfg.jobs, "parallel workers");
  app.add_flag("--dump-tables", dump_flag, "write deterministic table dumps");
  app.add_option("--dump-dir", dump_dir, "directory for --dump-tables");
  app.add_option("--config", config_path, "read the config from a JSON file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read config file: " + config_path);
      dlgreen::Json j = dlgreen::Json::parse(in);
      cfg = dlgreen::ExperimentConfig::from_json(j);
    } else {
      cfg.torus_split = (torus == "split" || torus == "both");
      cfg.torus_nonsplit = (torus == "nonsplit" || torus == "both");
      cfg.checks = checks;
      if (dump_flag) cfg.dump_dir = dump_dir;
    }
    cfg.validate();

    dlgreen::VerificationReport report = dlgreen::run_experiment(cfg);

    // human-readable summary: one line per (check, torus) with counts
    std::map<std::string, std::pair<long, long>> tally;
    for (const auto& rec : report.records) {
      std::string key = rec.check;
      if (rec.params.contains("torus")) key += " [" + rec.params["torus"].get<std::string>() + "]";
      auto& t = tally[key];
      if (rec.pass)
        ++t.first;
      else
        ++t.second;
    }
    long group_order = 0;
    for (const auto& rec : report.records)
      if (rec.check == "group_order") group_order = rec.lhs.get<long>();
    std::cout << "q=" << cfg.q << " r=" << cfg.r << "  |GL2(O_r)| = " << group_order << "\n";
    for (const auto& [key, t] : tally) {
      std::cout << "  " << std::left << std::setw(40) << key << " pass " << t.first;
      if (t.second) std::cout << "  FAIL " << t.second;
      std::cout << "\n";
    }
    std::cout << "total: " << report.pass << " passed, " << report.fail << " failed\n";
    return report.fail == 0 ? 0 : 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
