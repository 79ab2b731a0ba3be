#ifndef LSV_CHECKS_HPP
#define LSV_CHECKS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsv/models.hpp"

namespace lsv {

// Parameters for a named check. Zero means "use this check's default":
// order defaults to 8; the identity ranges default to their batch values
// (recursion 60, euler 40, gen-euler 40, eq4 p+q <= 20); max_weight
// defaults to the order. The randomized checks (gauge-ode, prop1) use a
// fixed internal seed so reports are reproducible byte for byte.
struct CheckParams {
  int order = 0;
  int max_n = 0;
  int max_weight = 0;
  std::string variant;  // gen-euler only: as-printed | sum-corrected | both
};

struct CheckReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::optional<CheckFailure> first_failure;
  std::vector<std::string> notes;
  double elapsed_ms = 0.0;
};

// All named checks, in declaration (and run-all) order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

// Runs one named check. Throws std::invalid_argument for unknown names or
// out-of-range parameters (a usage error, distinct from a failing check).
CheckReport run_check(const std::string& name, const CheckParams& params);

// Every check in declaration order at the given order, identity ranges at
// their batch values.
std::vector<CheckReport> run_all(const CheckParams& params);

// One human-readable line, e.g.
//   [PASS] ls-d2 order=10 (312.4 ms)
//   [FAIL] gen-euler variant=as-printed first failure at (n,m)=(4,0): expected 0, got 1/72
std::string report_text(const CheckReport& report);

// One structured record per check (single JSON object, fixed key order;
// byte-identical across runs except for elapsed_ms).
std::string report_json(const CheckReport& report);

}  // namespace lsv

#endif
