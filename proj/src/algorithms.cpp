#include "algorithms.hpp"

#include <cassert>

#include "hilbert.hpp"

namespace ginkit {

namespace {

// Appends invariants to a growing sequence by emitting gaps.  Subroutines are
// pure gap-emitters; the shared loop index of the recursive formulation is
// just the current sequence length.
class Emitter {
 public:
  explicit Emitter(const CIParams& p, long long lambda0) : p_(p), d_(derive(p)) {
    trace_.seq.params = p;
    trace_.seq.lambdas.push_back(lambda0);
    trace_.seq.phases.push_back(PhaseTag::partial_pattern());  // fixed up in finish()
  }

  long long i() const { return static_cast<long long>(trace_.seq.lambdas.size()); }
  long long lambda() const { return trace_.seq.lambdas.back(); }
  const DerivedParams& d() const { return d_; }

  void emit(long long gap, PhaseTag ph) {
    trace_.seq.lambdas.push_back(lambda() - gap);
    trace_.seq.phases.push_back(ph);
  }

  // x gaps of 1 followed by one gap of 2
  void onestwo(long long x, PhaseTag ph) {
    for (long long t = 1; t <= x; ++t) emit(1, ph);
    emit(2, ph);
  }

  // one gap of 2 followed by x gaps of 1
  void revonestwo(long long x, PhaseTag ph) {
    emit(2, ph);
    for (long long t = 1; t <= x; ++t) emit(1, ph);
  }

  void build(long long limq, PhaseTag ph) {
    for (long long q = 0; q <= limq; ++q)
      for (long long j = 1; j <= d_.l; ++j) onestwo(q, ph);
  }

  void reverse_build(long long limq, PhaseTag ph) {
    for (long long q = limq; q >= 0; --q)
      for (long long j = 1; j <= d_.l; ++j) revonestwo(q, ph);
  }

  void reverse_build_partial(long long limq, PhaseTag ph) {
    for (long long j = 1; j <= limq; ++j) emit(1, ph);
    for (long long j = 2; j <= d_.l; ++j) revonestwo(limq, ph);
  }

  void block_far(PhaseTag ph) {
    for (long long t = 1; t <= p_.alpha - 1; ++t) emit(2, ph);
    emit(p_.beta - 2 * p_.alpha + 2, ph);
  }

  void partial_block_far(PhaseTag ph) {
    for (long long h = 1; h <= p_.alpha - 1; ++h) emit(2, ph);
  }

  void block_mid(PhaseTag ph) {
    for (long long t = 1; t <= 2 * d_.r - 1; ++t) emit(t % 2 == 1 ? 1 : 2, ph);
    for (long long t = 1; t <= p_.alpha - (2 * d_.r - 1); ++t) emit(2, ph);
  }

  void partial_block_mid(PhaseTag ph) {
    for (long long t = 1; t <= 2 * d_.r - 1; ++t) emit(t % 2 == 1 ? 1 : 2, ph);
  }

  void block_close(PhaseTag ph) {
    const long long c = *d_.c, dd = *d_.d;
    if (dd == 0) {
      onestwo(c - 1, ph);
    } else {
      long long j = 1;
      for (; j <= dd; ++j) onestwo(c - 1, ph);
      for (; j <= d_.l; ++j) onestwo(c - 2, ph);
    }
  }

  void partial_block_close(PhaseTag ph) {
    for (long long j = 1; j <= *d_.d; ++j) onestwo(*d_.c - 1, ph);
  }

  void partial_block_equal(PhaseTag ph) {
    for (long long h = 1; h <= p_.n - 1; ++h) emit(1, ph);
  }

  // Runs `body` as a logged top-level subroutine call.
  template <typename F>
  void logged(const std::string& name, const std::string& args, F body) {
    const auto before = trace_.seq.lambdas.size();
    body();
    trace_.log.push_back({name, args, static_cast<long long>(trace_.seq.lambdas.size() - before)});
  }

  std::string at() const {
    return "i=" + std::to_string(i()) + ", lambda=" + std::to_string(lambda());
  }

  AlgorithmTrace finish() {
    // lambda_0 inherits the phase of the first gap-emitting step.
    if (trace_.seq.lambdas.size() > 1) trace_.seq.phases[0] = trace_.seq.phases[1];
    assert(static_cast<long long>(trace_.seq.lambdas.size()) == d_.k);
    return std::move(trace_);
  }

 private:
  CIParams p_;
  DerivedParams d_;
  AlgorithmTrace trace_;
};

[[noreturn]] void wrong_case(const char* runner, const CIParams& p) {
  fail(errc::invalid_params,
       std::string(runner) + " called with non-matching parameters (alpha=" +
           std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta) +
           ", n=" + std::to_string(p.n) + ")");
}

}  // namespace

CaseTag dispatch_case(const CIParams& p) {
  validate_params(p);
  if (p.alpha == p.beta) return CaseTag::Equal;
  if (p.beta >= 2 * p.alpha - 1) return CaseTag::Far;
  if (p.n == 1) return CaseTag::SinglePowerGeneric;
  if (2 * p.beta >= 3 * p.alpha) return CaseTag::Mid;
  const auto d = derive(p);
  if (p.alpha % d.l == 0 && p.n >= p.alpha / d.l + 1) return CaseTag::CloseDivides;
  if (p.alpha % d.l != 0 && p.n >= *d.c + 1) return CaseTag::CloseNotDivides;
  return CaseTag::CloseSmallN;
}

AlgorithmTrace run_far(const CIParams& p) {
  validate_params(p);
  if (!(p.beta >= 2 * p.alpha - 1)) wrong_case("run_far", p);
  Emitter em(p, derive(p).lambda0);
  for (long long h = 1; h <= p.n - 1; ++h)
    em.logged("BlockFar",
              em.at() + ", alpha=" + std::to_string(p.alpha) + ", beta=" + std::to_string(p.beta),
              [&] { em.block_far(PhaseTag::pattern(h - 1)); });
  em.logged("PartialBlockFar", em.at() + ", alpha=" + std::to_string(p.alpha),
            [&] { em.partial_block_far(PhaseTag::partial_pattern()); });
  return em.finish();
}

AlgorithmTrace run_mid(const CIParams& p) {
  validate_params(p);
  if (!(2 * p.alpha - 1 > p.beta && 2 * p.beta >= 3 * p.alpha && p.n >= 2)) wrong_case("run_mid", p);
  Emitter em(p, derive(p).lambda0);
  const auto& d = em.d();
  em.logged("Build", "limq=0, " + em.at(), [&] { em.build(0, PhaseTag::build()); });
  for (long long h = 1; h <= p.n - 2; ++h)
    em.logged("BlockMid",
              em.at() + ", r=" + std::to_string(d.r) + ", alpha=" + std::to_string(p.alpha),
              [&] { em.block_mid(PhaseTag::pattern(h - 1)); });
  em.logged("PartialBlockMid", em.at() + ", r=" + std::to_string(d.r),
            [&] { em.partial_block_mid(PhaseTag::partial_pattern()); });
  em.logged("ReverseBuild", "limq=0, " + em.at() + ", l=" + std::to_string(d.l),
            [&] { em.reverse_build(0, PhaseTag::reverse_build()); });
  return em.finish();
}

AlgorithmTrace run_close_divides(const CIParams& p) {
  validate_params(p);
  const auto dp = derive(p);
  if (!(2 * p.beta < 3 * p.alpha && p.beta > p.alpha && p.alpha % dp.l == 0 &&
        p.n >= p.alpha / dp.l + 1))
    wrong_case("run_close_divides", p);
  const long long c = *dp.c;
  Emitter em(p, derive(p).lambda0);
  em.logged("Build", "limq=" + std::to_string(c - 2) + ", " + em.at(),
            [&] { em.build(c - 2, PhaseTag::build()); });
  const long long reps = p.n * dp.l - p.alpha + dp.l;
  for (long long h = 1; h <= reps; ++h)
    em.logged("BlockClose",
              em.at() + ", c=" + std::to_string(c) + ", d=0, l=" + std::to_string(dp.l) +
                  ", alpha=" + std::to_string(p.alpha),
              [&] { em.block_close(PhaseTag::pattern(h - 1)); });
  em.logged("ReverseBuildPartial",
            "limq=" + std::to_string(c - 2) + ", " + em.at() + ", l=" + std::to_string(dp.l),
            [&] { em.reverse_build_partial(c - 2, PhaseTag::reverse_build_partial()); });
  em.logged("ReverseBuild",
            "limq=" + std::to_string(c - 3) + ", " + em.at() + ", l=" + std::to_string(dp.l),
            [&] { em.reverse_build(c - 3, PhaseTag::reverse_build()); });
  return em.finish();
}

AlgorithmTrace run_close_not_divides(const CIParams& p) {
  validate_params(p);
  const auto dp = derive(p);
  if (!(2 * p.beta < 3 * p.alpha && p.beta > p.alpha && p.alpha % dp.l != 0 && p.n >= *dp.c + 1))
    wrong_case("run_close_not_divides", p);
  const long long c = *dp.c, dd = *dp.d;
  Emitter em(p, derive(p).lambda0);
  em.logged("Build", "limq=" + std::to_string(c - 2) + ", " + em.at(),
            [&] { em.build(c - 2, PhaseTag::build()); });
  for (long long h = 1; h <= p.n - c; ++h)
    em.logged("BlockClose",
              em.at() + ", c=" + std::to_string(c) + ", d=" + std::to_string(dd) +
                  ", l=" + std::to_string(dp.l) + ", alpha=" + std::to_string(p.alpha),
              [&] { em.block_close(PhaseTag::pattern(h - 1)); });
  em.logged("PartialBlockClose",
            em.at() + ", c=" + std::to_string(c) + ", d=" + std::to_string(dd),
            [&] { em.partial_block_close(PhaseTag::partial_pattern()); });
  em.logged("ReverseBuildPartial",
            "limq=" + std::to_string(c - 2) + ", " + em.at() + ", l=" + std::to_string(dp.l),
            [&] { em.reverse_build_partial(c - 2, PhaseTag::reverse_build_partial()); });
  em.logged("ReverseBuild",
            "limq=" + std::to_string(c - 3) + ", " + em.at() + ", l=" + std::to_string(dp.l),
            [&] { em.reverse_build(c - 3, PhaseTag::reverse_build()); });
  return em.finish();
}

AlgorithmTrace run_close_small_n(const CIParams& p) {
  validate_params(p);
  const auto dp = derive(p);
  if (!(2 * p.beta < 3 * p.alpha && p.beta > p.alpha && p.n >= 2 && p.n < *dp.c + 1))
    wrong_case("run_close_small_n", p);
  Emitter em(p, derive(p).lambda0);
  em.logged("Build", "limq=" + std::to_string(p.n - 2) + ", " + em.at(),
            [&] { em.build(p.n - 2, PhaseTag::build()); });
  const long long reps = p.beta - p.n * dp.l;
  for (long long h = 1; h <= reps; ++h)
    em.logged("onestwo", "x=" + std::to_string(p.n - 1) + ", " + em.at(),
              [&] { em.onestwo(p.n - 1, PhaseTag::pattern(h - 1)); });
  em.logged("ReverseBuildPartial",
            "limq=" + std::to_string(p.n - 2) + ", " + em.at() + ", l=" + std::to_string(dp.l),
            [&] { em.reverse_build_partial(p.n - 2, PhaseTag::reverse_build_partial()); });
  if (p.n >= 3)
    em.logged("ReverseBuild",
              "limq=" + std::to_string(p.n - 3) + ", " + em.at() + ", l=" + std::to_string(dp.l),
              [&] { em.reverse_build(p.n - 3, PhaseTag::reverse_build()); });
  return em.finish();
}

AlgorithmTrace run_equal(const CIParams& p) {
  validate_params(p);
  if (p.alpha != p.beta) wrong_case("run_equal", p);
  Emitter em(p, derive(p).lambda0);
  for (long long h = 1; h <= p.alpha - 1; ++h)
    em.logged("onestwo", "x=" + std::to_string(p.n - 1) + ", " + em.at(),
              [&] { em.onestwo(p.n - 1, PhaseTag::pattern(h - 1)); });
  em.logged("PartialBlockEqual", em.at() + ", n=" + std::to_string(p.n),
            [&] { em.partial_block_equal(PhaseTag::partial_pattern()); });
  return em.finish();
}

AlgorithmTrace run_single_power_generic(const CIParams& p) {
  validate_params(p);
  if (!(p.n == 1 && p.beta > p.alpha)) wrong_case("run_single_power_generic", p);
  Emitter em(p, derive(p).lambda0);
  em.logged("AllTwos", em.at() + ", alpha=" + std::to_string(p.alpha), [&] {
    for (long long i = 1; i <= p.alpha - 1; ++i) em.emit(2, PhaseTag::partial_pattern());
  });
  return em.finish();
}

AlgorithmTrace run_dispatched(const CIParams& p) {
  switch (dispatch_case(p)) {
    case CaseTag::Far: return run_far(p);
    case CaseTag::Mid: return run_mid(p);
    case CaseTag::CloseDivides: return run_close_divides(p);
    case CaseTag::CloseNotDivides: return run_close_not_divides(p);
    case CaseTag::CloseSmallN: return run_close_small_n(p);
    case CaseTag::Equal: return run_equal(p);
    case CaseTag::SinglePowerGeneric: return run_single_power_generic(p);
  }
  fail(errc::internal, "unreachable dispatch");
}

InvariantSequence compute_invariants(const CIParams& p) {
  const CaseTag tag = dispatch_case(p);
  auto trace = run_dispatched(p);
  if (auto violation = check_sequence(trace.seq))
    fail(errc::structural_violation, "computed sequence invalid: " + *violation);
  if (tag == CaseTag::SinglePowerGeneric) {
    // The n = 1 region between the Equal and Far cases is served by the
    // all-twos formula; its output is only reported after passing the
    // Hilbert-equality gate, which certifies it as gin(I).
    const StableIdeal ideal{static_cast<long long>(trace.seq.lambdas.size()), trace.seq.lambdas};
    const auto rep = verify_hilbert_equality(p, ideal);
    if (!rep.ok)
      fail(errc::structural_violation,
           "single-power formula failed the Hilbert gate at t=" +
               std::to_string(rep.first_failure_t));
  }
  return std::move(trace.seq);
}

}  // namespace ginkit
