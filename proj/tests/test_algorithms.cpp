#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "algorithms.hpp"
#include "fixtures.hpp"

using namespace ginkit;

TEST_CASE("golden fixtures reproduce exactly") {
  for (const auto& fx : testing::golden_fixtures()) {
    CAPTURE(fx.params.alpha);
    CAPTURE(fx.params.beta);
    CAPTURE(fx.params.n);
    const auto seq = compute_invariants(fx.params);
    CHECK(seq.lambdas == fx.lambdas);
  }
}

TEST_CASE("dispatch_case resolves the documented examples") {
  CHECK(dispatch_case({4, 12, 3, 2}) == CaseTag::Far);
  CHECK(dispatch_case({6, 10, 5, 2}) == CaseTag::Mid);
  CHECK(dispatch_case({6, 8, 3, 2}) == CaseTag::CloseSmallN);
  CHECK(dispatch_case({1, 1, 5, 2}) == CaseTag::Equal);  // Equal precedes Far at alpha=beta=1
  CHECK(dispatch_case({9, 12, 4, 2}) == CaseTag::CloseDivides);
  CHECK(dispatch_case({12, 15, 5, 2}) == CaseTag::CloseDivides);
  CHECK(dispatch_case({10, 14, 4, 2}) == CaseTag::CloseNotDivides);
  CHECK(dispatch_case({7, 9, 6, 2}) == CaseTag::CloseNotDivides);
  CHECK(dispatch_case({7, 10, 2, 2}) == CaseTag::CloseSmallN);
  CHECK(dispatch_case({3, 4, 1, 2}) == CaseTag::SinglePowerGeneric);
  CHECK(dispatch_case({2, 3, 1, 2}) == CaseTag::Far);  // beta = 2*alpha - 1 boundary
  CHECK(dispatch_case({4, 4, 2, 2}) == CaseTag::Equal);
}

TEST_CASE("dispatch is total and the dispatched runner always succeeds") {
  for (const auto& p : testing::acceptance_grid()) {
    const auto tag = dispatch_case(p);
    const auto trace = run_dispatched(p);
    CHECK(trace.seq.lambdas.size() == static_cast<std::size_t>(derive(p).k));
    // re-dispatch agrees
    CHECK(dispatch_case(p) == tag);
  }
}

TEST_CASE("run_far on (1,2,2): single BlockFar degenerates to one gap of 2") {
  const auto trace = run_far({1, 2, 2, 2});
  CHECK(trace.seq.lambdas == std::vector<long long>{4, 2});
}

TEST_CASE("run_equal(4,4,2) gap sequence") {
  const auto trace = run_equal({4, 4, 2, 2});
  CHECK(gaps(trace.seq) == std::vector<long long>{1, 2, 1, 2, 1, 2, 1});
}

TEST_CASE("run_close_divides(9,12,4) emits 36 invariants ending 8,6,4") {
  const auto trace = run_close_divides({9, 12, 4, 2});
  REQUIRE(trace.seq.lambdas.size() == 36);
  const auto& lam = trace.seq.lambdas;
  CHECK(lam[33] == 8);
  CHECK(lam[34] == 6);
  CHECK(lam[35] == 4);
}

TEST_CASE("run_mid(6,10,5) gap sequence as printed") {
  const auto trace = run_mid({6, 10, 5, 2});
  CHECK(gaps(trace.seq) ==
        std::vector<long long>{2, 2, 2, 2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2,
                               2, 1, 2, 1, 2, 2, 2, 1, 2, 1, 2, 2, 2, 2});
}

TEST_CASE("run_single_power_generic") {
  CHECK(run_single_power_generic({3, 4, 1, 2}).seq.lambdas == std::vector<long long>{6, 4, 2});
  CHECK(run_single_power_generic({2, 3, 1, 2}).seq.lambdas == std::vector<long long>{4, 2});
  for (long long alpha = 1; alpha <= 9; ++alpha) {
    const auto trace = run_single_power_generic({alpha, alpha + 1, 1, 2});
    const auto g = gaps(trace.seq);
    CHECK(std::all_of(g.begin(), g.end(), [](long long x) { return x == 2; }));
    CHECK(trace.seq.lambdas.back() == 2);  // l + 1
  }
}

TEST_CASE("runners reject non-matching cases") {
  CHECK_THROWS_AS(run_mid({4, 12, 3, 2}), error);
  CHECK_THROWS_AS(run_far({6, 8, 3, 2}), error);
  CHECK_THROWS_AS(run_equal({2, 3, 1, 2}), error);
  CHECK_THROWS_AS(run_close_divides({10, 14, 4, 2}), error);
  CHECK_THROWS_AS(run_close_not_divides({9, 12, 4, 2}), error);
  CHECK_THROWS_AS(run_close_small_n({9, 12, 4, 2}), error);
  CHECK_THROWS_AS(run_single_power_generic({3, 4, 2, 2}), error);
  CHECK_THROWS_AS(run_single_power_generic({3, 3, 1, 2}), error);
}

TEST_CASE("run_far and run_equal agree on the alpha = beta = 1 overlap") {
  for (long long n = 1; n <= 6; ++n) {
    const CIParams p{1, 1, n, 2};
    CHECK(run_far(p).seq.lambdas == run_equal(p).seq.lambdas);
  }
}

namespace {

bool has_phase(const InvariantSequence& seq, Phase ph) {
  return std::any_of(seq.phases.begin(), seq.phases.end(),
                     [&](const PhaseTag& t) { return t.phase == ph; });
}

std::vector<long long> gaps_in_phase(const InvariantSequence& seq,
                                     std::initializer_list<Phase> phases) {
  std::vector<long long> out;
  for (std::size_t i = 1; i < seq.lambdas.size(); ++i)
    for (Phase ph : phases)
      if (seq.phases[i].phase == ph) {
        out.push_back(seq.lambdas[i - 1] - seq.lambdas[i]);
        break;
      }
  return out;
}

}  // namespace

TEST_CASE("phase structure: Build and ReverseBuild appear only in Mid/Close traces") {
  for (const auto& p : testing::acceptance_grid()) {
    const auto tag = dispatch_case(p);
    const auto seq = compute_invariants(p);
    const bool has_build = has_phase(seq, Phase::Build);
    const bool has_reverse =
        has_phase(seq, Phase::ReverseBuild) || has_phase(seq, Phase::ReverseBuildPartial);
    switch (tag) {
      case CaseTag::Far:
      case CaseTag::Equal:
      case CaseTag::SinglePowerGeneric:
        CHECK_FALSE(has_build);
        CHECK_FALSE(has_reverse);
        break;
      case CaseTag::Mid:
      case CaseTag::CloseDivides:
      case CaseTag::CloseNotDivides:
        CHECK(has_build);
        CHECK(has_reverse);
        CHECK(seq.phases.front() == PhaseTag::build());
        CHECK(seq.phases.back() == PhaseTag::reverse_build());
        break;
      case CaseTag::CloseSmallN:
        CHECK(has_build);
        CHECK(seq.phases.front() == PhaseTag::build());
        if (p.n >= 3) {
          CHECK(has_reverse);
          CHECK(seq.phases.back() == PhaseTag::reverse_build());
        } else if (derive(p).l >= 2) {
          // n = 2 skips the full ReverseBuild; the trace ends in the partial.
          CHECK(has_reverse);
          CHECK(seq.phases.back() == PhaseTag::reverse_build_partial());
        } else {
          // l = 1, n = 2: ReverseBuildPartial(0) emits nothing at all.
          CHECK_FALSE(has_reverse);
        }
        break;
    }
  }
}

TEST_CASE("mirror property between Build and Reverse Build gaps") {
  for (const auto& p : testing::acceptance_grid()) {
    const auto tag = dispatch_case(p);
    if (tag == CaseTag::Far || tag == CaseTag::Equal || tag == CaseTag::SinglePowerGeneric)
      continue;
    const auto seq = compute_invariants(p);
    auto build = gaps_in_phase(seq, {Phase::Build});
    const auto reverse =
        gaps_in_phase(seq, {Phase::ReverseBuildPartial, Phase::ReverseBuild});
    auto mirrored = reverse;
    std::reverse(mirrored.begin(), mirrored.end());
    if (tag == CaseTag::Mid) {
      CHECK(mirrored == build);
    } else {
      // everything but the final gap of the Build is reflected
      REQUIRE(!build.empty());
      build.pop_back();
      CHECK(mirrored == build);
    }
  }
}

TEST_CASE("block counts match the algorithm loop bounds") {
  const auto count_calls = [](const AlgorithmTrace& trace, const std::string& name) {
    return std::count_if(trace.log.begin(), trace.log.end(),
                         [&](const SubroutineCall& c) { return c.name == name; });
  };
  CHECK(count_calls(run_far({4, 12, 3, 2}), "BlockFar") == 2);
  CHECK(count_calls(run_far({4, 9, 4, 2}), "BlockFar") == 3);
  // CloseDivides repeats BlockClose n*l - alpha + l times
  CHECK(count_calls(run_close_divides({12, 15, 5, 2}), "BlockClose") == 6);
  CHECK(count_calls(run_close_divides({9, 12, 4, 2}), "BlockClose") == 6);
  CHECK(count_calls(run_close_not_divides({10, 14, 4, 2}), "BlockClose") == 1);
}

TEST_CASE("subroutine log counts sum to k - 1") {
  for (const auto& p : testing::acceptance_grid()) {
    const auto trace = run_dispatched(p);
    long long total = 0;
    for (const auto& call : trace.log) total += call.emitted;
    CHECK(total == derive(p).k - 1);
  }
}

TEST_CASE("sequence invariants hold on the full grid") {
  for (const auto& p : testing::acceptance_grid()) {
    const auto seq = compute_invariants(p);
    CHECK_FALSE(check_sequence(seq).has_value());
  }
}
