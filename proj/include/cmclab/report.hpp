#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmclab {

enum class CheckStatus { Pass, Fail, Skip, Info };

const char* status_name(CheckStatus s);

/// One verified statement: a residual or flag, the statement identifier it
/// checks, and the verdict. SKIP marks hypothesis rejections, never failures.
struct Check {
  std::string id;
  std::string paper_ref;
  double value = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Info;
  std::string note;
};

struct SuiteReport {
  std::string entry;
  std::string suite;
  int resolution = 0;
  std::vector<Check> checks;
};

struct RunConfig {
  int resolution = 128;
  int stencil_order = 4;
  double tol_scale = 1.0;
  std::uint64_t seed = 20240817ull;
  std::string format = "text";  // text | json | csv
  std::string out_path;
  std::vector<std::string> entries;
  std::vector<std::string> suites;

  void validate() const;  // resolution >= 16, tol_scale > 0, known format
};

std::string to_json(const std::vector<SuiteReport>& reports);
std::string to_csv(const std::vector<SuiteReport>& reports);
std::string to_text(const std::vector<SuiteReport>& reports);

/// 0 when no check failed, 1 otherwise.
int exit_code(const std::vector<SuiteReport>& reports);

}  // namespace cmclab
