// ginkit command line: compute, verify, sweep, chart, oracle, hilbert.
// Talks to the core exclusively through the ginkit C API.

#include <ginkit/ginkit.h>

#include <CLI11.hpp>
#include <array>
#include <atomic>
#include <algorithm>
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct ResultDeleter {
  void operator()(ginkit_result* r) const { ginkit_result_free(r); }
};
using ResultPtr = std::unique_ptr<ginkit_result, ResultDeleter>;

struct ParamFlags {
  long long alpha = 0, beta = 0, power = 0, vars = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "degree of the first form")->required();
    cmd->add_option("--beta", beta, "degree of the second form")->required();
    cmd->add_option("--power", power, "power n of the ideal")->required();
    cmd->add_option("--vars", vars, "number of ambient variables (default 2)");
  }
};

int usage_error() {
  std::fprintf(stderr, "error: %s\n", ginkit_last_error());
  return kExitUsage;
}

ResultPtr compute_or_null(const ParamFlags& p, int& exit_code) {
  ginkit_result* raw = nullptr;
  const ginkit_status st = ginkit_compute(p.alpha, p.beta, p.power, p.vars, &raw);
  if (st != GINKIT_OK) {
    exit_code = usage_error();
    return nullptr;
  }
  return ResultPtr(raw);
}

unsigned parse_checks_list(const std::vector<std::string>& names, bool& ok) {
  static const std::map<std::string, unsigned> table = {
      {"structure", GINKIT_CHECK_STRUCTURE}, {"hilbert", GINKIT_CHECK_HILBERT},
      {"closed-form", GINKIT_CHECK_CLOSED_FORM}, {"betti", GINKIT_CHECK_BETTI},
      {"oracle", GINKIT_CHECK_ORACLE}};
  unsigned mask = 0;
  ok = true;
  for (const auto& name : names) {
    auto it = table.find(name);
    if (it == table.end()) {
      std::fprintf(stderr, "error: unknown check '%s' (expected structure, hilbert, closed-form, betti, oracle)\n",
                   name.c_str());
      ok = false;
      return 0;
    }
    mask |= it->second;
  }
  return mask != 0 ? mask : unsigned{GINKIT_CHECK_DEFAULT};
}

bool parse_fault(const std::string& spec, long long& index, long long& delta) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return false;
  try {
    index = std::stoll(spec.substr(0, colon));
    delta = std::stoll(spec.substr(colon + 1));
  } catch (...) {
    return false;
  }
  return index >= 0 && delta != 0;
}

struct SweepOutcome {
  long long alpha, beta, n, m;
  std::string tag;
  bool pass;
  std::string json;
  std::string failure;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic initial ideals of powers of 2-complete intersections"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute invariants, gaps, and generators");
  ParamFlags compute_params;
  compute_params.attach(compute);
  std::string format = "text";
  compute->add_option("--format", format, "text, json, or m2")
      ->check(CLI::IsMember({"text", "json", "m2"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run correctness checks for one tuple");
  ParamFlags verify_params;
  verify_params.attach(verify);
  long long t_max = -1;
  std::vector<std::string> check_names;
  std::uint64_t seed = 1;
  std::string fault_spec;
  verify->add_option("--t-max", t_max, "extend the Hilbert sweep up to this degree");
  verify->add_option("--checks", check_names,
                     "subset of structure,hilbert,closed-form,betti,oracle")
      ->delimiter(',');
  verify->add_option("--seed", seed, "seed for the oracle check");
  verify->add_option("--inject-fault", fault_spec,
                     "perturb lambda_i before checking, format i:delta (testing aid)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid run with per-tuple checks and a case histogram");
  long long alpha_max = 0, beta_max = 0, n_max = 0;
  std::vector<long long> vars_list{2};
  long long parallel = 1;
  std::string sweep_format = "text";
  sweep->add_option("--alpha-max", alpha_max, "largest alpha")->required();
  sweep->add_option("--beta-max", beta_max, "largest beta")->required();
  sweep->add_option("--n-max", n_max, "largest power")->required();
  sweep->add_option("--vars-list", vars_list, "comma-separated variable counts")->delimiter(',');
  sweep->add_option("--parallel", parallel, "worker threads (0 = hardware concurrency)")
      ->expected(0, 1)
      ->default_str("1");
  sweep->add_option("--format", sweep_format, "text or json (one record per line)")
      ->check(CLI::IsMember({"text", "json"}));

  // chart
  auto* chart = app.add_subcommand("chart", "render the gap sequence as labeled phase segments");
  ParamFlags chart_params;
  chart_params.attach(chart);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "desk-scale Groebner cross-check of one tuple");
  ParamFlags oracle_params;
  oracle_params.attach(oracle);
  std::uint64_t oracle_seed = 1;
  oracle->add_option("--seed", oracle_seed, "base seed for the random runs");

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "pointwise Hilbert values for cross-checking");
  ParamFlags hilbert_params;
  hilbert_params.attach(hilbert);
  long long t_single = -1, hilbert_t_max = -1;
  bool brute = false;
  hilbert->add_option("--t", t_single, "single degree to evaluate");
  hilbert->add_option("--t-max", hilbert_t_max, "print all degrees 0..t-max");
  hilbert->add_flag("--brute", brute, "also print the brute-force monomial count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (compute->parsed()) {
    int exit_code = kExitOk;
    ResultPtr result = compute_or_null(compute_params, exit_code);
    if (!result) return exit_code;
    const char* rendered = ginkit_result_render(result.get(), format.c_str());
    std::fputs(rendered, stdout);
    if (format != "text") std::fputc('\n', stdout);
    return kExitOk;
  }

  if (verify->parsed()) {
    bool ok = true;
    const unsigned mask = parse_checks_list(check_names, ok);
    if (!ok) return kExitUsage;
    long long fault_index = -1, fault_delta = 0;
    if (!fault_spec.empty() && !parse_fault(fault_spec, fault_index, fault_delta)) {
      std::fprintf(stderr, "error: --inject-fault expects i:delta with i >= 0, delta != 0\n");
      return kExitUsage;
    }
    int exit_code = kExitOk;
    ResultPtr result = compute_or_null(verify_params, exit_code);
    if (!result) return exit_code;
    const ginkit_status st =
        ginkit_verify(result.get(), mask, t_max, seed, fault_index, fault_delta);
    if (st != GINKIT_OK && st != GINKIT_ERR_VERIFY) return usage_error();
    std::fputs(ginkit_result_report(result.get()), stdout);
    if (st == GINKIT_OK) {
      std::printf("all checks passed\n");
      return kExitOk;
    }
    std::printf("verification FAILED\n");
    return kExitVerifyFailure;
  }

  if (chart->parsed()) {
    int exit_code = kExitOk;
    ResultPtr result = compute_or_null(chart_params, exit_code);
    if (!result) return exit_code;
    std::fputs(ginkit_result_chart(result.get()), stdout);
    return kExitOk;
  }

  if (oracle->parsed()) {
    int exit_code = kExitOk;
    ResultPtr predicted = compute_or_null(oracle_params, exit_code);
    if (!predicted) return exit_code;
    ginkit_result* raw = nullptr;
    const ginkit_status st =
        ginkit_oracle_gin(oracle_params.alpha, oracle_params.beta, oracle_params.power,
                          oracle_params.vars, oracle_seed, 0, &raw);
    if (st != GINKIT_OK) return usage_error();
    ResultPtr observed(raw);

    const size_t count = ginkit_result_generator_count(observed.get());
    std::printf("oracle gin(I^%lld):    ", oracle_params.power);
    for (size_t i = 0; i < count; ++i)
      std::printf("%s%s", i ? ", " : "", ginkit_result_generator(observed.get(), i));
    std::printf("\npredicted gin(I^%lld): ", oracle_params.power);
    const size_t pcount = ginkit_result_generator_count(predicted.get());
    for (size_t i = 0; i < pcount; ++i)
      std::printf("%s%s", i ? ", " : "", ginkit_result_generator(predicted.get(), i));
    std::printf("\n");

    std::vector<long long> got(static_cast<size_t>(ginkit_result_k(observed.get())));
    std::vector<long long> want(static_cast<size_t>(ginkit_result_k(predicted.get())));
    size_t got_n = 0, want_n = 0;
    ginkit_result_lambdas(observed.get(), got.data(), got.size(), &got_n);
    ginkit_result_lambdas(predicted.get(), want.data(), want.size(), &want_n);
    if (got == want && got_n == want_n) {
      std::printf("agreement: oracle matches the predicted generators\n");
      return kExitOk;
    }
    std::printf("MISMATCH between oracle and prediction\n");
    return kExitVerifyFailure;
  }

  if (hilbert->parsed()) {
    const long long lo = t_single >= 0 ? t_single : 0;
    const long long hi = hilbert_t_max >= 0 ? hilbert_t_max : t_single;
    if (hi < 0) {
      std::fprintf(stderr, "error: pass --t or --t-max\n");
      return kExitUsage;
    }
    int exit_code = kExitOk;
    ResultPtr result = compute_or_null(hilbert_params, exit_code);
    if (!result) return exit_code;
    char in_buf[128], j_buf[128], brute_buf[128];
    std::printf(brute ? "t\tH_In\tH_J\tbrute\n" : "t\tH_In\tH_J\n");
    for (long long t = (hilbert_t_max >= 0 ? 0 : lo); t <= hi; ++t) {
      if (ginkit_hilbert_in(hilbert_params.alpha, hilbert_params.beta, hilbert_params.power,
                            hilbert_params.vars, t, in_buf, sizeof in_buf) != GINKIT_OK)
        return usage_error();
      if (ginkit_result_hilbert_j(result.get(), t, j_buf, sizeof j_buf) != GINKIT_OK)
        return usage_error();
      if (brute) {
        if (ginkit_hilbert_in_bruteforce(hilbert_params.alpha, hilbert_params.beta,
                                         hilbert_params.power, hilbert_params.vars, t, 0,
                                         brute_buf, sizeof brute_buf) != GINKIT_OK)
          return usage_error();
        std::printf("%lld\t%s\t%s\t%s\n", t, in_buf, j_buf, brute_buf);
      } else {
        std::printf("%lld\t%s\t%s\n", t, in_buf, j_buf);
      }
    }
    return kExitOk;
  }

  if (sweep->parsed()) {
    if (alpha_max < 1 || beta_max < 1 || n_max < 1 || vars_list.empty()) {
      std::fprintf(stderr, "error: sweep bounds must be positive and --vars-list nonempty\n");
      return kExitUsage;
    }
    std::vector<std::array<long long, 4>> tuples;
    for (long long a = 1; a <= alpha_max; ++a)
      for (long long b = a; b <= beta_max; ++b)
        for (long long n = 1; n <= n_max; ++n)
          for (long long m : vars_list) tuples.push_back({a, b, n, m});

    const bool want_json = sweep_format == "json";
    auto run_tuple = [&](const std::array<long long, 4>& t) -> SweepOutcome {
      SweepOutcome out{t[0], t[1], t[2], t[3], "", true, "", ""};
      ginkit_result* raw = nullptr;
      if (ginkit_compute(t[0], t[1], t[2], t[3], &raw) != GINKIT_OK) {
        out.pass = false;
        out.failure = ginkit_last_error();
        return out;
      }
      ResultPtr result(raw);
      out.tag = ginkit_result_case(result.get());
      const ginkit_status st =
          ginkit_verify(result.get(), GINKIT_CHECK_DEFAULT, -1, 1, -1, 0);
      out.pass = st == GINKIT_OK;
      if (!out.pass) out.failure = ginkit_result_report(result.get());
      if (want_json) out.json = ginkit_result_render(result.get(), "json");
      return out;
    };

    long long workers = parallel;
    if (workers == 0) workers = static_cast<long long>(std::thread::hardware_concurrency());
    workers = std::max<long long>(1, std::min<long long>(workers, 64));

    std::vector<SweepOutcome> outcomes(tuples.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const size_t idx = next.fetch_add(1);
        if (idx >= tuples.size()) return;
        outcomes[idx] = run_tuple(tuples[idx]);
      }
    };
    std::vector<std::thread> pool;
    for (long long w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    // outcomes are already in tuple order, so output is deterministic
    std::map<std::string, long long> histogram;
    std::vector<const SweepOutcome*> failures;
    for (const auto& out : outcomes) {
      if (!out.tag.empty()) ++histogram[out.tag];
      if (!out.pass) failures.push_back(&out);
      if (want_json && !out.json.empty()) std::printf("%s\n", out.json.c_str());
    }
    if (!want_json) {
      std::printf("tuples: %zu  failures: %zu\n", tuples.size(), failures.size());
      std::printf("case histogram:\n");
      for (const auto& [tag, cnt] : histogram) std::printf("  %-20s %lld\n", tag.c_str(), cnt);
    }
    if (!failures.empty()) {
      for (const auto* f : failures)
        std::fprintf(stderr, "FAIL (%lld,%lld,%lld,%lld)\n%s", f->alpha, f->beta, f->n, f->m,
                     f->failure.c_str());
      return kExitVerifyFailure;
    }
    if (!want_json) std::printf("all tuples verified\n");
    return kExitOk;
  }

  return kExitUsage;
}
