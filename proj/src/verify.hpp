#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace ginkit {

// Bitmask of verification checks.  The default set excludes the Groebner
// oracle, which is desk-scale only and must be requested explicitly.
enum : unsigned {
  kCheckStructure = 1u << 0,
  kCheckHilbert = 1u << 1,
  kCheckClosedForm = 1u << 2,
  kCheckBetti = 1u << 3,
  kCheckOracle = 1u << 4,
  kCheckDefault = kCheckStructure | kCheckHilbert | kCheckClosedForm | kCheckBetti,
};

std::optional<unsigned> parse_check_name(const std::string& name);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  long long ms = 0;
};

struct VerifyOptions {
  std::optional<long long> t_max;   // extends the Hilbert sweep upward
  std::uint64_t seed = 1;           // oracle determinism
  long long fault_index = -1;       // perturb lambda_{fault_index} ...
  long long fault_delta = 0;        // ... by this amount (testing aid)
};

// Runs the selected checks against compute_invariants(p); all_pass is the
// conjunction.  fault_index >= 0 perturbs the computed sequence before any
// check runs.
struct VerifyReport {
  std::vector<CheckResult> results;
  bool all_pass = true;
};

VerifyReport run_checks(const CIParams& p, unsigned mask, const VerifyOptions& opts = {});

}  // namespace ginkit
