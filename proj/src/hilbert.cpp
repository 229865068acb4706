#include "hilbert.hpp"

#include <algorithm>

namespace ginkit {

BigInt binom(long long s, long long t) {
  if (t < 0 || t > s) return 0;
  t = std::min(t, s - t);
  BigInt num = 1;
  for (long long i = 1; i <= t; ++i) {
    num *= (s - t + i);
    num /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return num;
}

BigInt hilbert_In(const CIParams& p, long long t) {
  validate_params(p);
  const long long m = p.m;
  BigInt total = binom(t - p.n * p.alpha + m - 1, m - 1);
  for (long long j = 1; j <= p.n; ++j) {
    total += binom(t - p.alpha * (p.n - j) - p.beta * j + m - 1, m - 1);
    total -= binom(t - p.alpha * j - p.beta * (p.n + 1 - j) + m - 1, m - 1);
  }
  return total;
}

BigInt hilbert_J(const StableIdeal& ideal, long long m, long long t) {
  BigInt total = binom(t - ideal.k + m - 1, m - 1);
  for (long long i = 0; i < ideal.k; ++i)
    total += binom(t - ideal.lambdas[static_cast<std::size_t>(i)] - i + m - 2, m - 2);
  return total;
}

HilbertProfile hilbert_profile_In(const CIParams& p, long long t_max) {
  HilbertProfile profile;
  profile.t_max = t_max;
  for (long long t = 0; t <= t_max; ++t) profile.values[t] = hilbert_In(p, t);
  return profile;
}

HilbertProfile hilbert_profile_J(const StableIdeal& ideal, long long m, long long t_max) {
  HilbertProfile profile;
  profile.t_max = t_max;
  for (long long t = 0; t <= t_max; ++t) profile.values[t] = hilbert_J(ideal, m, t);
  return profile;
}

HilbertEqualityReport verify_hilbert_equality(const CIParams& p, const StableIdeal& ideal,
                                              std::optional<long long> t_max) {
  const auto d = derive(p);
  long long top = d.lambda0;
  for (long long lam : ideal.lambdas) top = std::max(top, lam);
  long long sweep_end = top + p.m;
  if (t_max) sweep_end = std::max(sweep_end, *t_max);

  HilbertEqualityReport report;
  report.t_max = sweep_end;
  for (long long t = 0; t <= sweep_end; ++t) {
    BigInt hj = hilbert_J(ideal, p.m, t);
    BigInt hin = hilbert_In(p, t);
    if (hj != hin) {
      report.ok = false;
      report.first_failure_t = t;
      report.h_j = std::move(hj);
      report.h_in = std::move(hin);
      return report;
    }
  }
  return report;
}

BigInt hilbert_In_bruteforce(const CIParams& p, long long t, long long bound) {
  validate_params(p);
  if (t > bound)
    fail(errc::scale_exceeded, "bruteforce t=" + std::to_string(t) + " exceeds bound " +
                                   std::to_string(bound));
  if (p.m > 5) fail(errc::scale_exceeded, "bruteforce supports m <= 5");
  if (t < 0) return 0;

  long long count = 0;
  // e1, e2 decide membership; the remaining variables are enumerated blindly.
  for (long long e1 = 0; e1 <= t; ++e1) {
    // largest usable i in x1^{alpha i} x2^{beta (n-i)}
    const long long i = std::min(p.n, e1 / p.alpha);
    const long long need_e2 = p.beta * (p.n - i);
    for (long long e2 = 0; e2 <= t - e1; ++e2) {
      if (e2 < need_e2) continue;
      const long long rest = t - e1 - e2;
      if (p.m == 2) {
        if (rest == 0) ++count;
        continue;
      }
      // enumerate exponent vectors of the remaining m-2 variables summing
      // to rest; the last variable absorbs the remainder
      long long vars_left = p.m - 2;
      // depth-first walk without materializing vectors
      struct Frame {
        long long remaining;
        long long var;
      };
      std::vector<Frame> stack{{rest, 1}};
      while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.var == vars_left) {
          ++count;  // last variable takes f.remaining
          continue;
        }
        for (long long e = f.remaining; e >= 0; --e) stack.push_back({f.remaining - e, f.var + 1});
      }
    }
  }
  return count;
}

}  // namespace ginkit
