#pragma once

#include "cmclab/catalog.hpp"
#include "cmclab/report.hpp"

namespace cmclab {

/// {"ambient", "pointwise", "boundary", "integral", "topology", "algebra"}
const std::vector<std::string>& suite_names();

/// Run one named suite over one catalog entry. Hypothesis mismatches come back
/// as SKIP checks; genuine residual violations as FAIL.
SuiteReport run_suite(const CatalogEntry& entry, const std::string& suite,
                      const RunConfig& config);

}  // namespace cmclab
