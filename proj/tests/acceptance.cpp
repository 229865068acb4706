// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.  Every comparison is exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "algorithms.hpp"
#include "betti.hpp"
#include "closed_form.hpp"
#include "fixtures.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"

using namespace ginkit;
using ginkit::testing::acceptance_grid;
using ginkit::testing::golden_fixtures;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("criterion %d %s  %s (%lld ms)%s%s\n", number, pass ? "PASS" : "FAIL",
              label.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

}  // namespace

int main() {
  criterion(1, "golden fixtures: twelve reference invariant and gap sequences", [](std::string& detail) {
    for (const auto& fx : golden_fixtures()) {
      const auto seq = compute_invariants(fx.params);
      if (seq.lambdas != fx.lambdas) {
        detail = "lambda mismatch at (" + std::to_string(fx.params.alpha) + "," +
                 std::to_string(fx.params.beta) + "," + std::to_string(fx.params.n) + ")";
        return false;
      }
      std::vector<long long> expected_gaps;
      for (std::size_t i = 1; i < fx.lambdas.size(); ++i)
        expected_gaps.push_back(fx.lambdas[i - 1] - fx.lambdas[i]);
      if (gaps(seq) != expected_gaps) {
        detail = "gap mismatch";
        return false;
      }
    }
    detail = "12 fixtures";
    return true;
  });

  criterion(2, "structural invariants across the grid", [](std::string& detail) {
    int count = 0;
    for (const auto& p : acceptance_grid()) {
      const auto seq = compute_invariants(p);
      if (auto violation = check_sequence(seq)) {
        detail = *violation;
        return false;
      }
      ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
  });

  criterion(3, "Hilbert-function equality H_J == H_In on [0, lambda0+m]", [](std::string& detail) {
    int count = 0;
    for (const auto& p : acceptance_grid()) {
      const auto ideal = to_generators(compute_invariants(p));
      const auto rep = verify_hilbert_equality(p, ideal);
      if (!rep.ok) {
        detail = "failed at (" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," +
                 std::to_string(p.n) + "," + std::to_string(p.m) + ") t=" +
                 std::to_string(rep.first_failure_t);
        return false;
      }
      ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
  });

  criterion(4, "closed-form formulas equal the iterative algorithms", [](std::string& detail) {
    int count = 0;
    for (const auto& p : acceptance_grid()) {
      if (full_sequence_closed(p).lambdas != compute_invariants(p).lambdas) {
        detail = "mismatch at (" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," +
                 std::to_string(p.n) + ")";
        return false;
      }
      ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
  });

  criterion(5, "Betti cancellation and extremal-shift identities", [](std::string& detail) {
    int count = 0;
    for (const auto& p : acceptance_grid()) {
      const auto d = derive(p);
      const auto ideal = to_generators(compute_invariants(p));
      const auto gin_table = betti_J(ideal);
      const auto in_table = betti_In(p);
      if (!check_cancellation(gin_table, in_table)) {
        detail = "cancellation failed";
        return false;
      }
      if (*gin_table.b1.rbegin() != d.lambda0 + 1 ||
          *in_table.b1.rbegin() != p.alpha + p.n * p.beta) {
        detail = "max-shift identity failed";
        return false;
      }
      if (*std::next(in_table.b0.begin()) != p.alpha * (p.n - 1) + p.beta ||
          ideal.lambdas.back() + d.k - 1 != p.alpha * (p.n - 1) + p.beta) {
        detail = "second-smallest shift identity failed";
        return false;
      }
      ++count;
    }
    detail = std::to_string(count) + " tuples";
    return true;
  });

  criterion(6, "brute-force Hilbert oracle agreement (t <= 40)", [](std::string& detail) {
    long long points = 0;
    for (long long a = 1; a <= 5; ++a)
      for (long long b = a; b <= 8; ++b)
        for (long long n = 1; n <= 3; ++n)
          for (long long m : {2, 3, 4})
            for (long long t = 0; t <= 40; ++t) {
              const CIParams p{a, b, n, m};
              if (hilbert_In_bruteforce(p, t) != hilbert_In(p, t)) {
                detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(n) + "," + std::to_string(m) + ") t=" + std::to_string(t);
                return false;
              }
              ++points;
            }
    detail = std::to_string(points) + " evaluation points";
    return true;
  });

  criterion(7, "Groebner end-to-end on the nine desk-scale tuples, two seeds each",
            [](std::string& detail) {
              const std::vector<CIParams> tuples = {
                  {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 1, 2}, {2, 2, 1, 2}, {2, 3, 1, 2},
                  {1, 2, 2, 2}, {2, 2, 2, 2}, {1, 1, 1, 3}, {2, 3, 1, 3}};
              for (const auto& p : tuples) {
                const auto predicted = to_generators(compute_invariants(p));
                for (std::uint64_t seed : {7ull, 1007ull}) {
                  const auto got = oracle_gin_single_run(p, default_oracle_config(seed), seed);
                  if (got != predicted) {
                    detail = "mismatch at (" + std::to_string(p.alpha) + "," +
                             std::to_string(p.beta) + "," + std::to_string(p.n) + "," +
                             std::to_string(p.m) + ") seed=" + std::to_string(seed);
                    return false;
                  }
                }
              }
              detail = "9 tuples x 2 seeds";
              return true;
            });

  criterion(8, "binomial identities on the [-50, 200] lattice", [](std::string& detail) {
    long long checks = 0;
    // Pascal recursion, z >= 1 and p >= 1
    for (long long z = 1; z <= 200; z += 3)
      for (long long p = 1; p <= 200; p += 7) {
        if (binom(z, p) != binom(z - 1, p - 1) + binom(z - 1, p)) {
          detail = "Pascal failed";
          return false;
        }
        ++checks;
      }
    // prefix sums, any L and p >= 0
    for (long long L = -50; L <= 200; L += 10)
      for (long long p : {0, 1, 2, 3, 5, 11, 50, 200}) {
        BigInt total = 0;
        for (long long z = 0; z <= L; ++z) total += binom(z, p);
        if (total != binom(L + 1, p + 1)) {
          detail = "summation failed";
          return false;
        }
        ++checks;
      }
    // shifted window sums, L1 <= L2 positive
    for (long long z = -50; z <= 200; z += 25)
      for (long long L1 : {1, 3, 9, 40, 111})
        for (long long L2 : {2, 8, 41, 150, 200}) {
          if (L1 > L2) continue;
          for (long long p : {0, 1, 2, 4}) {
            BigInt ascending = 0, descending = 0;
            for (long long j = L1; j <= L2; ++j) {
              ascending += binom(z + j, p);
              descending += binom(z - j, p);
            }
            if (ascending != binom(z + L2 + 1, p + 1) - binom(z + L1, p + 1)) {
              detail = "ascending window failed";
              return false;
            }
            if (descending != binom(z - L1 + 1, p + 1) - binom(z - L2, p + 1)) {
              detail = "descending window failed";
              return false;
            }
            checks += 2;
          }
        }
    detail = std::to_string(checks) + " identity instances";
    return true;
  });

  criterion(9, "fault injection: any single +/-1 perturbation breaks Hilbert equality",
            [](std::string& detail) {
              const auto grid = acceptance_grid();
              std::mt19937_64 rng(20240815);
              for (int trial = 0; trial < 50; ++trial) {
                const auto& p = grid[rng() % grid.size()];
                auto ideal = to_generators(compute_invariants(p));
                const std::size_t index = rng() % ideal.lambdas.size();
                const long long delta = (rng() & 1) ? 1 : -1;
                ideal.lambdas[index] += delta;
                if (verify_hilbert_equality(p, ideal).ok) {
                  detail = "perturbation went undetected at (" + std::to_string(p.alpha) + "," +
                           std::to_string(p.beta) + "," + std::to_string(p.n) + "," +
                           std::to_string(p.m) + ") index " + std::to_string(index);
                  return false;
                }
              }
              detail = "50 random perturbations all detected";
              return true;
            });

  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures;
}
