#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace demflag {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // filled on failure, or when there is a finding to surface
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

/// Grid bounds shared by the verification suites. Each suite derives its own
/// ranges: lengths from max_s, levels from max_m, series/expansion orders and
/// k-ranges from order.
struct VerifyBounds {
  int max_s = 12;
  int max_m = 5;
  int order = 8;
};

/// Suite names accepted by run_suite: km, lpart, chebyshev, mock, schur,
/// dims, recursion, transitivity.
const std::vector<std::string>& suite_names();

/// Runs one named suite; cells may be evaluated on `threads` workers, and
/// the report order is fixed by the grid, never by completion order.
SuiteReport run_suite(const std::string& name, const VerifyBounds& bounds,
                      int threads = 1);

nlohmann::ordered_json report_to_json(const std::vector<SuiteReport>& reports);

}  // namespace demflag
