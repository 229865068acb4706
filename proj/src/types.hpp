#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace ginkit {

// Input tuple for a complete-intersection power problem: two forms of degrees
// alpha <= beta, the power n, and the number of ambient variables m.
struct CIParams {
  long long alpha = 1;
  long long beta = 1;
  long long n = 1;
  long long m = 2;

  friend bool operator==(const CIParams&, const CIParams&) = default;
};

// Throws error(errc::invalid_params) naming the violated constraint.
void validate_params(const CIParams& p);

// Quantities derived from (alpha, beta, n).  c, d, E, B exist only when
// l = beta - alpha is positive.
struct DerivedParams {
  long long k = 0;            // n * alpha
  long long l = 0;            // beta - alpha
  long long r = 0;            // 2 * alpha - beta (may be negative)
  long long lambda0 = 0;      // n * beta + alpha - 1
  long long lambda_last = 0;  // beta - alpha + 1
  std::optional<long long> c;  // smallest c with l * c >= alpha
  std::optional<long long> d;  // alpha mod l
  std::optional<long long> E;  // l * (1 + ... + (c - 1))
  std::optional<long long> B;  // l * (2 + ... + c)

  friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

DerivedParams derive(const CIParams& p);

enum class CaseTag {
  Far,
  Mid,
  CloseDivides,
  CloseNotDivides,
  CloseSmallN,
  Equal,
  SinglePowerGeneric,
};

std::string to_string(CaseTag tag);

enum class Phase {
  Build,
  PatternBlock,
  PartialPatternBlock,
  ReverseBuildPartial,
  ReverseBuild,
};

struct PhaseTag {
  Phase phase = Phase::Build;
  long long block = 0;  // pattern block index, meaningful for PatternBlock

  static PhaseTag build() { return {Phase::Build, 0}; }
  static PhaseTag pattern(long long index) { return {Phase::PatternBlock, index}; }
  static PhaseTag partial_pattern() { return {Phase::PartialPatternBlock, 0}; }
  static PhaseTag reverse_build_partial() { return {Phase::ReverseBuildPartial, 0}; }
  static PhaseTag reverse_build() { return {Phase::ReverseBuild, 0}; }

  friend bool operator==(const PhaseTag&, const PhaseTag&) = default;
};

std::string to_string(const PhaseTag& tag);

// The invariants lambda_0 > lambda_1 > ... > lambda_{k-1} of gin(I^n),
// annotated with the algorithm phase that produced each entry.  lambda_0's
// phase is the phase of the first gap-emitting step (Build when one exists).
struct InvariantSequence {
  CIParams params;
  std::vector<long long> lambdas;
  std::vector<PhaseTag> phases;

  friend bool operator==(const InvariantSequence&, const InvariantSequence&) = default;
};

// Consecutive differences g_i = lambda_{i-1} - lambda_i, length k - 1.
std::vector<long long> gaps(const InvariantSequence& seq);

// Returns a description of the first violated sequence invariant, or nullopt
// when the sequence is valid: length k, strictly decreasing, endpoint values,
// gap alphabet {1, 2, beta - 2 alpha + 2}, gap sum (n-1) beta + 2 alpha - 2.
std::optional<std::string> check_sequence(const InvariantSequence& seq);

// The two-variable strongly stable ideal
// (x^k, x^{k-1} y^{lambda_{k-1}}, ..., x y^{lambda_1}, y^{lambda_0}).
struct StableIdeal {
  long long k = 0;
  std::vector<long long> lambdas;  // lambda_0 .. lambda_{k-1}

  // Generator strings ordered by descending x exponent: "x^k" first,
  // "y^{lambda_0}" last.  Mixed generators render as "x^i*y^j".
  std::vector<std::string> generators() const;

  friend bool operator==(const StableIdeal&, const StableIdeal&) = default;
};

// Validates every sequence invariant, then projects to a StableIdeal.
// Throws error(errc::structural_violation) when a check fails.
StableIdeal to_generators(const InvariantSequence& seq);

}  // namespace ginkit
