#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "types.hpp"

namespace ginkit {

using BigRat = boost::multiprecision::cpp_rational;

// Exponent vector in a fixed number of variables x1 > x2 > ... > xm.
struct Monomial {
  std::vector<int> e;

  long long degree() const;
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial quotient(const Monomial& other) const;  // this / other, assumes divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial one(int nvars);
  bool is_coprime_with(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded reverse lexicographic comparison: higher degree wins; at equal
// degree the monomial with the smaller exponent at the last differing
// variable is larger (so x1^2 x3 < x1 x2^2).
bool revlex_less(const Monomial& a, const Monomial& b);

struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return revlex_less(b, a); }
};

// Exact-rational polynomial with terms kept in descending revlex order, so
// the leading term is always the first entry.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigRat, RevlexGreater>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial term(Monomial mono, BigRat coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  const Monomial& leading_monomial() const;
  const BigRat& leading_coeff() const;
  long long degree() const;  // degree of the leading term

  void add_term(const Monomial& mono, const BigRat& coeff);
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial times_term(const Monomial& mono, const BigRat& coeff) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial pow(long long e) const;
  void make_monic();

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

std::string to_string(const Monomial& mono);
std::string to_string(const Polynomial& poly);

struct OracleConfig {
  std::uint64_t seed = 1;
  long long coeff_bound = 50;
  std::size_t max_basis_size = 512;
  int retry_limit = 3;
};

// Reads GINKIT_MAX_BASIS when set; otherwise the built-in cap.
OracleConfig default_oracle_config(std::uint64_t seed);

// Two dense homogeneous forms of degrees alpha and beta with nonzero integer
// coefficients in [-coeff_bound, coeff_bound], certified to be a regular
// sequence by comparing dim (I_t) with the complete-intersection Hilbert
// function for t <= alpha + beta.  Resamples up to retry_limit times.
// Desk-scale only: m <= 3, alpha <= 3, beta <= 4.
std::pair<Polynomial, Polynomial> random_ci(const CIParams& p, const OracleConfig& cfg);

// f(g(x_1), ..., g(x_m)) where g(x_i) = sum_j g[i][j] x_j, exact arithmetic.
// Throws error(errc::invalid_params) when the matrix is singular.
Polynomial apply_change_of_coords(const Polynomial& f,
                                  const std::vector<std::vector<long long>>& g_matrix);

// Reduced Groebner basis under revlex.  Pair selection: smallest lcm degree,
// then first index.  Deterministic for a fixed input order.  Throws
// error(errc::cap_exceeded) when the basis outgrows max_basis_size.
std::vector<Polynomial> buchberger_revlex(std::vector<Polynomial> generators,
                                          std::size_t max_basis_size = 512);

// Leading monomials of a reduced basis = minimal generators of the initial
// ideal.
std::vector<Monomial> initial_ideal_min_gens(const std::vector<Polynomial>& reduced_basis);

// True when the monomial ideal generated by gens is closed under
// x_j * mono / x_i for every j < i (checked on the given generators).
bool is_strongly_stable(const std::vector<Monomial>& gens, int nvars);

// Number of degree-t monomials in nvars variables divisible by some gen.
long long count_monomial_multiples(const std::vector<Monomial>& gens, int nvars, long long t);

// End-to-end: random complete intersection, random integer change of
// coordinates, Buchberger on the n+1 products f^i g^{n-i}, and read-off of
// (k, lambda list) from the minimal generators of the initial ideal.  Runs
// seeds until two independent runs agree; throws error(errc::unstable) after
// retry_limit disagreements.  Desk-scale: additionally n <= 2.
StableIdeal oracle_gin(const CIParams& p, const OracleConfig& cfg);

// Single run for a fixed seed (exposed for tests).
StableIdeal oracle_gin_single_run(const CIParams& p, const OracleConfig& cfg, std::uint64_t seed);

// Exact rank of the degree-t slice of the ideal generated by the given homogeneous
// forms (dimension of its degree-t graded piece).
long long homogeneous_piece_dim(const std::vector<Polynomial>& gens, long long t);

// Regularity test used by random_ci, exposed for the degenerate fixtures.
bool is_regular_pair(const Polynomial& f, const Polynomial& g, const CIParams& p);

}  // namespace ginkit
