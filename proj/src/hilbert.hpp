#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

#include "types.hpp"

namespace ginkit {

using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient with the convention C(s,t) = 0 when t < 0 or t > s
// (so C(s,t) = 0 for every s < 0, and C(0,0) = 1).  Total and exact.
BigInt binom(long long s, long long t);

// H_{I^n}(t) for a type (alpha, beta) complete intersection in m variables,
// evaluated from the resolution:
//   sum_{j=1}^{n} [ C(t - a(n-j) - bj + m-1, m-1) - C(t - aj - b(n+1-j) + m-1, m-1) ]
//   + C(t - na + m-1, m-1).
BigInt hilbert_In(const CIParams& p, long long t);

// H_J(t) for J = (x^k, x^{k-1} y^{lambda_{k-1}}, ..., y^{lambda_0}) in m
// variables:
//   sum_{i=0}^{k-1} C(t - lambda_i - i + m-2, m-2) + C(t - k + m-1, m-1).
// The formula does not require strict decrease, so perturbed lambda lists are
// accepted (fault-injection relies on this).
BigInt hilbert_J(const StableIdeal& ideal, long long m, long long t);

// Tabulated values H(t) for 0 <= t <= t_max.  Entries below the least degree
// n*alpha are zero.
struct HilbertProfile {
  std::map<long long, BigInt> values;
  long long t_max = 0;
};

HilbertProfile hilbert_profile_In(const CIParams& p, long long t_max);
HilbertProfile hilbert_profile_J(const StableIdeal& ideal, long long m, long long t_max);

struct HilbertEqualityReport {
  bool ok = true;
  long long t_max = 0;        // inclusive upper end of the sweep
  long long first_failure_t = -1;
  BigInt h_j;                 // values at the first failing t
  BigInt h_in;
};

// Sweeps t in [0, max(lambda0, ideal's top exponent) + m], extended upward by
// t_max when given.  For t above the sweep every binomial argument sits where
// C is a fixed polynomial in t of degree <= m-1, and two such polynomials
// that agree on the m points lambda0+1 .. lambda0+m agree identically, so the
// pointwise sweep certifies equality for all t.
HilbertEqualityReport verify_hilbert_equality(const CIParams& p, const StableIdeal& ideal,
                                              std::optional<long long> t_max = std::nullopt);

// Counts, by recursive enumeration of exponent vectors and with no binomial
// arithmetic, the monomials of degree t in m variables divisible by at least
// one generator x1^{alpha*i} x2^{beta*(n-i)}, i = 0..n.  This is a valid
// oracle for H_{I^n}(t) because the Betti numbers of I^n depend only on
// (alpha, beta, n, m), so the monomial complete intersection represents the
// class.  Throws error(errc::scale_exceeded) for t > bound or m > 5.
BigInt hilbert_In_bruteforce(const CIParams& p, long long t, long long bound = 60);

}  // namespace ginkit
