#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algorithms.hpp"
#include "fixtures.hpp"
#include "hilbert.hpp"

using namespace ginkit;

TEST_CASE("binom basics and conventions") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(-2, 0) == 0);
  CHECK(binom(-2, -3) == 0);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(200, 100) > BigInt("90000000000000000000000000000000000000000000000000000000000"));
}

TEST_CASE("Pascal recursion holds for z >= 1, p >= 1") {
  for (long long z = 1; z <= 200; z += 3)
    for (long long p = 1; p <= 200; p += 7)
      CHECK(binom(z, p) == binom(z - 1, p - 1) + binom(z - 1, p));
}

TEST_CASE("summation identity: sum_{z=0}^{L} C(z,p) = C(L+1, p+1)") {
  for (long long L = -50; L <= 200; L += 10)
    for (long long p : {0, 1, 2, 3, 5, 11, 50, 200}) {
      BigInt total = 0;
      for (long long z = 0; z <= L; ++z) total += binom(z, p);
      CHECK(total == binom(L + 1, p + 1));
    }
}

TEST_CASE("shifted summation identities over j = L1..L2") {
  for (long long z = -50; z <= 200; z += 25)
    for (long long L1 : {1, 2, 7, 30, 120})
      for (long long L2 : {1, 5, 31, 64, 200}) {
        if (L1 > L2) continue;
        for (long long p : {0, 1, 2, 4}) {
          BigInt ascending = 0, descending = 0;
          for (long long j = L1; j <= L2; ++j) {
            ascending += binom(z + j, p);
            descending += binom(z - j, p);
          }
          CHECK(ascending == binom(z + L2 + 1, p + 1) - binom(z + L1, p + 1));
          CHECK(descending == binom(z - L1 + 1, p + 1) - binom(z - L2, p + 1));
        }
      }
}

TEST_CASE("hilbert_In documented values") {
  CHECK(hilbert_In({1, 1, 1, 2}, 1) == 2);
  CHECK(hilbert_In({2, 3, 1, 2}, 4) == 5);
  for (const CIParams p : {CIParams{2, 3, 2, 3}, CIParams{4, 12, 3, 4}, CIParams{3, 3, 5, 2}})
    for (long long t = 0; t < p.n * p.alpha; ++t) CHECK(hilbert_In(p, t) == 0);
}

TEST_CASE("hilbert_J documented values") {
  const StableIdeal xy{1, {1}};
  CHECK(hilbert_J(xy, 2, 1) == 2);
  CHECK(hilbert_J(xy, 2, 0) == 0);

  const StableIdeal small{2, {4, 2}};  // (x^2, x y^2, y^4)
  CHECK(hilbert_J(small, 2, 3) == 3);  // x^3, x^2 y, x y^2

  const StableIdeal tall{1, {1000000}};
  for (long long t : {1, 2, 57, 999999}) CHECK(hilbert_J(tall, 2, t) == t);
}

TEST_CASE("hilbert profiles tabulate both functions consistently") {
  const CIParams p{3, 5, 2, 3};
  const auto d = derive(p);
  const auto ideal = to_generators(compute_invariants(p));
  const auto in_profile = hilbert_profile_In(p, d.lambda0 + p.m);
  const auto j_profile = hilbert_profile_J(ideal, p.m, d.lambda0 + p.m);
  REQUIRE(in_profile.values.size() == static_cast<std::size_t>(d.lambda0 + p.m) + 1);
  CHECK(in_profile.values == j_profile.values);
  for (long long t = 0; t < d.k; ++t) CHECK(in_profile.values.at(t) == 0);
  CHECK(in_profile.values.at(d.k) > 0);
}

TEST_CASE("hilbert_J is zero below n*alpha and positive from there on") {
  for (const auto& p : testing::acceptance_grid()) {
    if (p.beta > 12) continue;  // keep this fast; acceptance covers the rest
    const auto ideal = to_generators(compute_invariants(p));
    const auto d = derive(p);
    CHECK(hilbert_J(ideal, p.m, d.k - 1) == 0);
    for (long long t = d.k; t <= d.k + 3; ++t) CHECK(hilbert_J(ideal, p.m, t) > 0);
  }
}

TEST_CASE("verify_hilbert_equality certifies the computed gin") {
  const CIParams p{4, 12, 3, 3};
  const auto ideal = to_generators(compute_invariants(p));
  CHECK(verify_hilbert_equality(p, ideal).ok);

  auto perturbed = ideal;
  perturbed.lambdas[5] = 24;  // printed value is 25
  const auto rep = verify_hilbert_equality(p, perturbed);
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failure_t > 0);
  CHECK(rep.h_j != rep.h_in);

  CHECK(verify_hilbert_equality({1, 1, 1, 2}, StableIdeal{1, {1}}).ok);
}

TEST_CASE("extending the sweep beyond lambda0 + m finds nothing new") {
  // Above the default bound both Hilbert functions are polynomials of degree
  // <= m-1 that already agree on m consecutive points.
  for (const CIParams p : {CIParams{3, 4, 2, 2}, CIParams{2, 5, 3, 3}, CIParams{4, 4, 2, 4},
                           CIParams{5, 7, 2, 5}, CIParams{6, 8, 3, 2}}) {
    const auto ideal = to_generators(compute_invariants(p));
    const long long twice = 2 * derive(p).lambda0;
    CHECK(verify_hilbert_equality(p, ideal, twice).ok);
  }
}

TEST_CASE("bruteforce counter matches the documented examples") {
  CHECK(hilbert_In_bruteforce({2, 3, 1, 2}, 4) == 5);
  CHECK(hilbert_In_bruteforce({1, 1, 2, 2}, 1) == 0);
  CHECK(hilbert_In_bruteforce({1, 1, 2, 2}, 2) == 3);
  CHECK(hilbert_In_bruteforce({2, 2, 2, 3}, 4) == hilbert_In({2, 2, 2, 3}, 4));
}

TEST_CASE("bruteforce enforces its enumeration bounds") {
  CHECK_THROWS_AS(hilbert_In_bruteforce({2, 3, 1, 2}, 61), error);
  CHECK_THROWS_AS(hilbert_In_bruteforce({2, 3, 1, 6}, 4), error);
  CHECK_NOTHROW(hilbert_In_bruteforce({2, 3, 1, 2}, 70, 80));
}

TEST_CASE("bruteforce agrees with the resolution formula on a spot grid") {
  // The full oracle-equivalence grid runs in the acceptance suite.
  for (long long a = 1; a <= 3; ++a)
    for (long long b = a; b <= 5; ++b)
      for (long long n = 1; n <= 2; ++n)
        for (long long m : {2, 3})
          for (long long t = 0; t <= 20; ++t) {
            const CIParams p{a, b, n, m};
            CHECK(hilbert_In_bruteforce(p, t) == hilbert_In(p, t));
          }
}
