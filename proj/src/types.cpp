#include "types.hpp"

#include <numeric>

namespace ginkit {

void validate_params(const CIParams& p) {
  if (p.alpha < 1) fail(errc::invalid_params, "alpha must satisfy alpha >= 1");
  if (p.beta < p.alpha) fail(errc::invalid_params, "beta must satisfy beta >= alpha");
  if (p.n < 1) fail(errc::invalid_params, "n must satisfy n >= 1");
  if (p.m < 2) fail(errc::invalid_params, "m must satisfy m >= 2");
}

DerivedParams derive(const CIParams& p) {
  validate_params(p);
  DerivedParams d;
  d.k = p.n * p.alpha;
  d.l = p.beta - p.alpha;
  d.r = 2 * p.alpha - p.beta;
  d.lambda0 = p.n * p.beta + p.alpha - 1;
  d.lambda_last = p.beta - p.alpha + 1;
  if (d.l > 0) {
    long long c = (p.alpha + d.l - 1) / d.l;  // ceil(alpha / l)
    long long dd = p.alpha % d.l;
    d.c = c;
    d.d = dd;
    d.E = d.l * (c - 1) * c / 2;
    d.B = d.l * (c * (c + 1) / 2 - 1);
  }
  return d;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Far: return "Far";
    case CaseTag::Mid: return "Mid";
    case CaseTag::CloseDivides: return "CloseDivides";
    case CaseTag::CloseNotDivides: return "CloseNotDivides";
    case CaseTag::CloseSmallN: return "CloseSmallN";
    case CaseTag::Equal: return "Equal";
    case CaseTag::SinglePowerGeneric: return "SinglePowerGeneric";
  }
  return "?";
}

std::string to_string(const PhaseTag& tag) {
  switch (tag.phase) {
    case Phase::Build: return "Build";
    case Phase::PatternBlock: return "PatternBlock(" + std::to_string(tag.block) + ")";
    case Phase::PartialPatternBlock: return "PartialPatternBlock";
    case Phase::ReverseBuildPartial: return "ReverseBuildPartial";
    case Phase::ReverseBuild: return "ReverseBuild";
  }
  return "?";
}

std::vector<long long> gaps(const InvariantSequence& seq) {
  std::vector<long long> g;
  if (seq.lambdas.size() < 2) return g;
  g.reserve(seq.lambdas.size() - 1);
  for (std::size_t i = 1; i < seq.lambdas.size(); ++i)
    g.push_back(seq.lambdas[i - 1] - seq.lambdas[i]);
  return g;
}

std::optional<std::string> check_sequence(const InvariantSequence& seq) {
  const auto d = derive(seq.params);
  const auto& lam = seq.lambdas;
  if (static_cast<long long>(lam.size()) != d.k)
    return "length " + std::to_string(lam.size()) + " != k = " + std::to_string(d.k);
  if (seq.phases.size() != lam.size())
    return "phase annotation length mismatch";
  if (lam.front() != d.lambda0)
    return "lambda_0 = " + std::to_string(lam.front()) +
           " != n*beta + alpha - 1 = " + std::to_string(d.lambda0);
  if (lam.back() != d.lambda_last)
    return "lambda_{k-1} = " + std::to_string(lam.back()) +
           " != beta - alpha + 1 = " + std::to_string(d.lambda_last);
  const long long far_gap = seq.params.beta - 2 * seq.params.alpha + 2;
  long long sum = 0;
  for (std::size_t i = 1; i < lam.size(); ++i) {
    const long long g = lam[i - 1] - lam[i];
    if (g <= 0)
      return "not strictly decreasing at index " + std::to_string(i);
    if (g != 1 && g != 2 && g != far_gap)
      return "gap " + std::to_string(g) + " at index " + std::to_string(i) +
             " outside {1, 2, " + std::to_string(far_gap) + "}";
    sum += g;
  }
  const long long expected_sum = (seq.params.n - 1) * seq.params.beta + 2 * seq.params.alpha - 2;
  if (sum != expected_sum)
    return "gap sum " + std::to_string(sum) + " != (n-1)*beta + 2*alpha - 2 = " +
           std::to_string(expected_sum);
  // Pattern block indices must be contiguous from 0.
  long long next_block = 0;
  for (const auto& ph : seq.phases) {
    if (ph.phase != Phase::PatternBlock) continue;
    if (ph.block > next_block) return "pattern block indices not contiguous";
    if (ph.block == next_block) ++next_block;
  }
  return std::nullopt;
}

std::vector<std::string> StableIdeal::generators() const {
  std::vector<std::string> gens;
  gens.reserve(static_cast<std::size_t>(k) + 1);
  gens.push_back("x^" + std::to_string(k));
  for (long long i = k - 1; i >= 0; --i) {
    const long long lam = lambdas[static_cast<std::size_t>(i)];
    if (i == 0)
      gens.push_back("y^" + std::to_string(lam));
    else
      gens.push_back("x^" + std::to_string(i) + "*y^" + std::to_string(lam));
  }
  return gens;
}

StableIdeal to_generators(const InvariantSequence& seq) {
  if (auto violation = check_sequence(seq))
    fail(errc::structural_violation, *violation);
  return StableIdeal{static_cast<long long>(seq.lambdas.size()), seq.lambdas};
}

}  // namespace ginkit
