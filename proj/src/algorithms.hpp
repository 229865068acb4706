#pragma once

#include <string>
#include <vector>

#include "types.hpp"

namespace ginkit {

// One top-level subroutine invocation made by an algorithm body, with the
// argument values at call time and how many invariants it appended.
struct SubroutineCall {
  std::string name;
  std::string args;
  long long emitted = 0;

  friend bool operator==(const SubroutineCall&, const SubroutineCall&) = default;
};

struct AlgorithmTrace {
  InvariantSequence seq;
  std::vector<SubroutineCall> log;  // emitted counts sum to k - 1
};

// Resolves the unique case for valid params.  Precedence: Equal, Far,
// SinglePowerGeneric (n = 1), Mid, CloseDivides, CloseNotDivides, CloseSmallN.
CaseTag dispatch_case(const CIParams& p);

// Case runners.  Each checks its own region and throws
// error(errc::invalid_params) when called with non-matching parameters, so
// they are individually testable outside dispatch.
AlgorithmTrace run_far(const CIParams& p);                   // beta >= 2 alpha - 1, n >= 1
AlgorithmTrace run_mid(const CIParams& p);                   // 2 alpha - 1 > beta, 2 beta >= 3 alpha, n >= 2
AlgorithmTrace run_close_divides(const CIParams& p);         // 3 alpha > 2 beta, l | alpha, n >= alpha/l + 1
AlgorithmTrace run_close_not_divides(const CIParams& p);     // 3 alpha > 2 beta, l∤alpha, n >= ceil(alpha/l) + 1
AlgorithmTrace run_close_small_n(const CIParams& p);         // 3 alpha > 2 beta, 2 <= n < ceil(alpha/l) + 1
AlgorithmTrace run_equal(const CIParams& p);                 // alpha = beta, n >= 1
AlgorithmTrace run_single_power_generic(const CIParams& p);  // n = 1, beta > alpha

// Runs the dispatched case runner.
AlgorithmTrace run_dispatched(const CIParams& p);

// Dispatches, runs, and validates every sequence invariant.  A validation
// failure here signals an implementation bug, never a bad input.
InvariantSequence compute_invariants(const CIParams& p);

}  // namespace ginkit
