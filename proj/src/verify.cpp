#include "verify.hpp"

#include <chrono>
#include <functional>

#include "algorithms.hpp"
#include "betti.hpp"
#include "closed_form.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"

namespace ginkit {

std::optional<unsigned> parse_check_name(const std::string& name) {
  if (name == "structure") return kCheckStructure;
  if (name == "hilbert") return kCheckHilbert;
  if (name == "closed-form") return kCheckClosedForm;
  if (name == "betti") return kCheckBetti;
  if (name == "oracle") return kCheckOracle;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = Clock::now();
  CheckResult result;
  result.name = name;
  try {
    auto [pass, detail] = body();
    result.pass = pass;
    result.detail = std::move(detail);
  } catch (const error& e) {
    result.pass = false;
    result.detail = e.what();
  }
  result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return result;
}

std::string join_lambdas(const std::vector<long long>& v) {
  std::string s;
  for (long long x : v) {
    if (!s.empty()) s += ",";
    s += std::to_string(x);
  }
  return s;
}

}  // namespace

VerifyReport run_checks(const CIParams& p, unsigned mask, const VerifyOptions& opts) {
  validate_params(p);
  InvariantSequence seq = compute_invariants(p);
  if (opts.fault_index >= 0) {
    if (opts.fault_index >= static_cast<long long>(seq.lambdas.size()))
      fail(errc::invalid_params, "fault index outside [0, k-1]");
    seq.lambdas[static_cast<std::size_t>(opts.fault_index)] += opts.fault_delta;
  }
  const StableIdeal ideal{static_cast<long long>(seq.lambdas.size()), seq.lambdas};

  VerifyReport report;

  if (mask & kCheckStructure)
    report.results.push_back(timed("structure", [&]() -> std::pair<bool, std::string> {
      if (auto violation = check_sequence(seq)) return {false, *violation};
      if (ideal.generators().size() != static_cast<std::size_t>(ideal.k) + 1)
        return {false, "generator count != k + 1"};
      if (p.alpha == 1 && p.beta == 1) {
        // Far and Equal overlap at alpha = beta = 1; both runners must agree.
        if (run_far(p).seq.lambdas != run_equal(p).seq.lambdas)
          return {false, "run_far and run_equal disagree at alpha = beta = 1"};
      }
      return {true, "k=" + std::to_string(ideal.k) + ", " +
                        std::to_string(ideal.k + 1) + " generators"};
    }));

  if (mask & kCheckHilbert)
    report.results.push_back(timed("hilbert", [&]() -> std::pair<bool, std::string> {
      const auto rep = verify_hilbert_equality(p, ideal, opts.t_max);
      if (!rep.ok)
        return {false, "smallest failing t=" + std::to_string(rep.first_failure_t) +
                           ": H_J=" + rep.h_j.str() + ", H_In=" + rep.h_in.str()};
      return {true, "H_J == H_In on t in [0," + std::to_string(rep.t_max) + "]"};
    }));

  if (mask & kCheckClosedForm)
    report.results.push_back(timed("closed-form", [&]() -> std::pair<bool, std::string> {
      const auto closed = full_sequence_closed(p);
      if (closed.lambdas != seq.lambdas) {
        for (std::size_t i = 0; i < closed.lambdas.size(); ++i)
          if (closed.lambdas[i] != seq.lambdas[i])
            return {false, "first mismatch at v=" + std::to_string(i) + ": closed=" +
                               std::to_string(closed.lambdas[i]) + ", iterative=" +
                               std::to_string(seq.lambdas[i])};
        return {false, "length mismatch"};
      }
      return {true, "all " + std::to_string(seq.lambdas.size()) + " indices agree"};
    }));

  if (mask & kCheckBetti)
    report.results.push_back(timed("betti", [&]() -> std::pair<bool, std::string> {
      const auto gin_table = betti_J(ideal);
      const auto in_table = betti_In(p);
      if (!check_cancellation(gin_table, in_table))
        return {false, "no consecutive-cancellation sequence from gin table to I^n table"};
      const auto d = derive(p);
      if (*gin_table.b1.rbegin() != d.lambda0 + 1)
        return {false, "max b1 shift of gin != lambda0 + 1"};
      if (*in_table.b1.rbegin() != p.alpha + p.n * p.beta)
        return {false, "max b1 shift of I^n != alpha + n*beta"};
      if (*gin_table.b0.begin() != d.k || *in_table.b0.begin() != d.k)
        return {false, "min b0 shift != n*alpha"};
      const long long second = *std::next(in_table.b0.begin());
      if (second != p.alpha * (p.n - 1) + p.beta)
        return {false, "second-smallest b0 of I^n != alpha(n-1) + beta"};
      if (ideal.lambdas.back() + ideal.k - 1 != second)
        return {false, "lambda_{k-1} + k - 1 != alpha(n-1) + beta"};
      return {true, "cancellation and shift identities hold"};
    }));

  if (mask & kCheckOracle)
    report.results.push_back(timed("oracle", [&]() -> std::pair<bool, std::string> {
      const auto cfg = default_oracle_config(opts.seed);
      const StableIdeal got = oracle_gin(p, cfg);
      if (got != ideal)
        return {false, "oracle computed lambdas [" + join_lambdas(got.lambdas) +
                           "], predicted [" + join_lambdas(ideal.lambdas) + "]"};
      return {true, "Groebner read-off agrees on two seeds"};
    }));

  for (const auto& r : report.results) report.all_pass = report.all_pass && r.pass;
  return report;
}

}  // namespace ginkit
