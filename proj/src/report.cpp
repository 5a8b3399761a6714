#include "cmclab/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cmclab {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
    default:
      return "INFO";
  }
}

void RunConfig::validate() const {
  if (resolution < 16) throw std::invalid_argument("resolution must be at least 16");
  if (!(tol_scale > 0.0)) throw std::invalid_argument("tolerance scale must be positive");
  if (stencil_order != 2 && stencil_order != 4)
    throw std::invalid_argument("stencil order must be 2 or 4");
  if (format != "text" && format != "json" && format != "csv")
    throw std::invalid_argument("format must be one of text, json, csv");
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::ordered_json report_json(const SuiteReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["paper_ref"] = c.paper_ref;
    jc["value"] = c.value;
    jc["tolerance"] = c.tolerance;
    jc["status"] = status_name(c.status);
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(jc);
  }
  nlohmann::ordered_json j;
  j["entry"] = r.entry;
  j["suite"] = r.suite;
  j["resolution"] = r.resolution;
  j["checks"] = checks;
  return j;
}

}  // namespace

std::string to_json(const std::vector<SuiteReport>& reports) {
  if (reports.size() == 1) return report_json(reports[0]).dump(2) + "\n";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string to_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  out << "entry,suite,resolution,id,paper_ref,value,tolerance,status,note\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      out << r.entry << ',' << r.suite << ',' << r.resolution << ',' << c.id << ','
          << c.paper_ref << ',' << fmt_double(c.value) << ',' << fmt_double(c.tolerance) << ','
          << status_name(c.status) << ',' << c.note << '\n';
    }
  return out.str();
}

std::string to_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  int fails = 0, passes = 0, skips = 0;
  for (const auto& r : reports) {
    out << "== " << r.entry << " / " << r.suite << " (resolution " << r.resolution << ")\n";
    for (const auto& c : r.checks) {
      out << "  [" << status_name(c.status) << "] " << c.id << " (" << c.paper_ref << ")"
          << "  value=" << fmt_double(c.value);
      if (c.status == CheckStatus::Pass || c.status == CheckStatus::Fail)
        out << "  tol=" << fmt_double(c.tolerance);
      if (!c.note.empty()) out << "  -- " << c.note;
      out << '\n';
      if (c.status == CheckStatus::Fail) ++fails;
      if (c.status == CheckStatus::Pass) ++passes;
      if (c.status == CheckStatus::Skip) ++skips;
    }
  }
  out << "summary: " << passes << " passed, " << fails << " failed, " << skips << " skipped\n";
  return out.str();
}

int exit_code(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail) return 1;
  return 0;
}

}  // namespace cmclab
