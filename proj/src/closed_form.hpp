#pragma once

#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace ginkit {

// How an index v splits into the coordinates of the formula family that
// covers it, e.g. (j, s) with v = j*alpha + s in the Far case, or (q, j, x)
// inside a Build.
struct ClosedFormIndex {
  long long v = 0;
  std::string family;  // "Far", "Equal", "SinglePowerGeneric", "Build", "Pattern", "ReverseBuild"
  std::vector<std::pair<std::string, long long>> coordinates;
};

// Evaluates lambda_v directly from the per-case index formulas, without
// running the iterative algorithm.  Throws error(errc::index_out_of_range)
// for v outside [0, k-1] and error(errc::coverage_gap) if no formula range
// contains v or two overlapping ranges disagree (either is a bug signal).
long long lambda_closed(const CIParams& p, long long v);

// The decomposition backing lambda_closed(p, v); when several ranges cover v
// the one that wins the Build -> Pattern -> ReverseBuild precedence is
// reported.
ClosedFormIndex decompose(const CIParams& p, long long v);

// Assembles lambda_closed over v = 0..k-1, with phases taken from the
// matched formula family.
InvariantSequence full_sequence_closed(const CIParams& p);

}  // namespace ginkit
