// Command-line front end: runs verification suites over catalog entries and
// emits structured reports.

#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmclab/catalog.hpp"
#include "cmclab/report.hpp"
#include "cmclab/suites.hpp"

namespace {

using cmclab::Check;
using cmclab::CheckStatus;
using cmclab::RunConfig;
using cmclab::SuiteReport;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

int resolve_selection(RunConfig& cfg) {
  if (cfg.entries.empty()) cfg.entries = cmclab::entry_ids();
  if (cfg.suites.empty()) cfg.suites = cmclab::suite_names();
  for (const auto& s : cfg.suites) {
    const auto& names = cmclab::suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      std::cerr << "unknown suite: " << s << "\n";
      return 2;
    }
  }
  for (const auto& e : cfg.entries) {
    const auto ids = cmclab::entry_ids();
    if (std::find(ids.begin(), ids.end(), e) == ids.end()) {
      std::cerr << "unknown entry: " << e << "\n";
      return 2;
    }
  }
  return 0;
}

int run_reports(RunConfig cfg, bool gate_exit_code) {
  cfg.validate();
  if (int rc = resolve_selection(cfg)) return rc;
  std::vector<SuiteReport> reports;
  for (const auto& entry_id : cfg.entries) {
    cmclab::CatalogEntry entry = cmclab::find_entry(entry_id);
    for (const auto& suite : cfg.suites)
      reports.push_back(cmclab::run_suite(entry, suite, cfg));
  }
  std::string text;
  if (cfg.format == "json")
    text = cmclab::to_json(reports);
  else if (cfg.format == "csv")
    text = cmclab::to_csv(reports);
  else
    text = cmclab::to_text(reports);
  emit(text, cfg.out_path);
  return gate_exit_code ? cmclab::exit_code(reports) : 0;
}

int run_refine(RunConfig cfg, std::vector<int> resolutions) {
  if (cfg.entries.size() != 1 || cfg.suites.size() != 1) {
    std::cerr << "refine needs exactly one --entry and one --suite\n";
    return 2;
  }
  if (resolutions.size() < 2) {
    std::cerr << "refine needs at least two --resolution values\n";
    return 2;
  }
  if (int rc = resolve_selection(cfg)) return rc;
  cmclab::CatalogEntry entry = cmclab::find_entry(cfg.entries[0]);

  std::vector<SuiteReport> runs;
  for (int res : resolutions) {
    RunConfig c = cfg;
    c.resolution = res;
    c.validate();
    runs.push_back(cmclab::run_suite(entry, cfg.suites[0], c));
  }

  struct Row {
    std::string id, paper_ref;
    std::vector<double> values;
    double observed_order = 0.0;
  };
  std::vector<Row> rows;
  for (const auto& base : runs.front().checks) {
    if (base.status != CheckStatus::Pass && base.status != CheckStatus::Fail) continue;
    Row row{base.id, base.paper_ref, {}, 0.0};
    bool complete = true;
    for (const auto& run : runs) {
      const Check* found = nullptr;
      for (const auto& c : run.checks)
        if (c.id == base.id) found = &c;
      if (!found) {
        complete = false;
        break;
      }
      row.values.push_back(std::abs(found->value));
    }
    if (!complete) continue;
    const double v0 = row.values.front(), v1 = row.values.back();
    if (v0 > 0.0 && v1 > 0.0)
      row.observed_order = std::log(v0 / v1) /
                           std::log(double(resolutions.back()) / resolutions.front());
    rows.push_back(std::move(row));
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["entry"] = cfg.entries[0];
    j["suite"] = cfg.suites[0];
    j["resolutions"] = resolutions;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json jr;
      jr["id"] = r.id;
      jr["paper_ref"] = r.paper_ref;
      jr["values"] = r.values;
      jr["observed_order"] = r.observed_order;
      arr.push_back(jr);
    }
    j["rows"] = arr;
    emit(j.dump(2) + "\n", cfg.out_path);
  } else {
    std::ostringstream out;
    out << "refine " << cfg.entries[0] << " / " << cfg.suites[0] << " over resolutions";
    for (int r : resolutions) out << " " << r;
    out << "\n";
    for (const auto& r : rows) {
      out << "  " << r.id << " (" << r.paper_ref << "):";
      for (double v : r.values) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " %.3e", v);
        out << buf;
      }
      char buf[48];
      std::snprintf(buf, sizeof(buf), "  order=%.2f", r.observed_order);
      out << buf << "\n";
    }
    emit(out.str(), cfg.out_path);
  }
  return 0;
}

}  // namespace

namespace {

// flat key=value config, same keys as the flags; values given on the command
// line win because parsing happens afterwards
int load_config_file(const std::string& path, RunConfig& cfg,
                     std::vector<int>& refine_resolutions) {
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot read config file: " << path << "\n";
    return 2;
  }
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "entry")
        cfg.entries.push_back(value);
      else if (key == "suite")
        cfg.suites.push_back(value);
      else if (key == "resolution") {
        cfg.resolution = std::stoi(value);
        refine_resolutions.push_back(cfg.resolution);
      } else if (key == "tol-scale")
        cfg.tol_scale = std::stod(value);
      else if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "format")
        cfg.format = value;
      else if (key == "out")
        cfg.out_path = value;
      else {
        std::cerr << "unknown config key: " << key << "\n";
        return 2;
      }
    } catch (const std::exception&) {
      std::cerr << "bad config value for " << key << ": " << value << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suites for free-boundary constant-mean-curvature geometry"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<int> refine_resolutions;

  // apply a config file before flags so that flags win
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    std::string path;
    if (arg == "--config" && i + 1 < argc)
      path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0)
      path = arg.substr(9);
    if (!path.empty())
      if (int rc = load_config_file(path, cfg, refine_resolutions)) return rc;
  }

  std::string config_path;
  auto add_common = [&](CLI::App* sub, bool refine) {
    sub->add_option("--config", config_path, "flat key=value config file (flags win)");
    sub->add_option("--entry", cfg.entries, "catalog entries (default: all)");
    sub->add_option("--suite", cfg.suites, "suites to run (default: all)");
    if (refine)
      sub->add_option("--resolution", refine_resolutions, "resolution ladder")->expected(-2);
    else
      sub->add_option("--resolution", cfg.resolution, "grid cells per axis");
    sub->add_option("--tol-scale", cfg.tol_scale, "multiply every tolerance");
    sub->add_option("--seed", cfg.seed, "random seed for sampled checks");
    sub->add_option("--format", cfg.format, "text | json | csv");
    sub->add_option("--out", cfg.out_path, "write the report to a file");
  };

  CLI::App* verify = app.add_subcommand("verify", "run suites; exit 1 on any FAIL");
  add_common(verify, false);
  CLI::App* report = app.add_subcommand("report", "run suites; always exit 0");
  add_common(report, false);
  CLI::App* catalog = app.add_subcommand("catalog", "list catalog entries");
  std::string catalog_action = "list";
  catalog->add_option("action", catalog_action, "list");
  CLI::App* refine = app.add_subcommand("refine", "rerun one suite over a resolution ladder");
  add_common(refine, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_reports(cfg, true);
    if (report->parsed()) return run_reports(cfg, false);
    if (refine->parsed()) return run_refine(cfg, refine_resolutions);
    if (catalog->parsed()) {
      if (catalog_action != "list") {
        std::cerr << "unknown catalog action: " << catalog_action << "\n";
        return 2;
      }
      for (const auto& id : cmclab::entry_ids()) std::cout << id << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
