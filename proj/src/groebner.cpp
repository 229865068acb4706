#include "groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <tuple>

#include "hilbert.hpp"

namespace ginkit {

long long Monomial::degree() const {
  long long d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= other.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial Monomial::one(int nvars) { return Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0)}; }

bool Monomial::is_coprime_with(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && other.e[i] > 0) return false;
  return true;
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  const long long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];  // larger trailing exponent loses
  }
  return false;
}

Polynomial Polynomial::term(Monomial mono, BigRat coeff) {
  Polynomial p(static_cast<int>(mono.e.size()));
  if (coeff != 0) p.terms_.emplace(std::move(mono), std::move(coeff));
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) fail(errc::internal, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const BigRat& Polynomial::leading_coeff() const {
  if (terms_.empty()) fail(errc::internal, "leading term of zero polynomial");
  return terms_.begin()->second;
}

long long Polynomial::degree() const { return terms_.empty() ? -1 : leading_monomial().degree(); }

void Polynomial::add_term(const Monomial& mono, const BigRat& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

Polynomial Polynomial::times_term(const Monomial& mono, const BigRat& coeff) const {
  Polynomial r(nvars_);
  if (coeff == 0) return r;
  for (const auto& [m0, c0] : terms_) r.terms_.emplace(m0.times(mono), c0 * coeff);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial r(nvars_);
  for (const auto& [mono, coeff] : other.terms_) r += times_term(mono, coeff);
  return r;
}

Polynomial Polynomial::pow(long long e) const {
  Polynomial r = Polynomial::term(Monomial::one(nvars_), 1);
  for (long long i = 0; i < e; ++i) r = r * (*this);
  return r;
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  const BigRat lc = leading_coeff();
  if (lc == 1) return;
  for (auto& [mono, coeff] : terms_) coeff /= lc;
}

std::string to_string(const Monomial& mono) {
  std::string s;
  for (std::size_t i = 0; i < mono.e.size(); ++i) {
    if (mono.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1) + "^" + std::to_string(mono.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& poly) {
  if (poly.is_zero()) return "0";
  std::string s;
  for (const auto& [mono, coeff] : poly.terms()) {
    if (!s.empty()) s += " + ";
    s += coeff.str() + "*" + to_string(mono);
  }
  return s;
}

namespace {

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
  const unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
  const unsigned long long reject_from = (~0ULL / span) * span;
  unsigned long long v;
  do {
    v = rng();
  } while (v >= reject_from);
  return lo + static_cast<long long>(v % span);
}

long long rand_nonzero(std::mt19937_64& rng, long long bound) {
  const long long v = rand_range(rng, 1, 2 * bound);
  return v <= bound ? v - bound - 1 : v - bound;
}

void enumerate_monomials_rec(int nvars, int var, long long remaining, Monomial& scratch,
                             std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    scratch.e[static_cast<std::size_t>(var)] = static_cast<int>(remaining);
    out.push_back(scratch);
    return;
  }
  for (long long x = remaining; x >= 0; --x) {
    scratch.e[static_cast<std::size_t>(var)] = static_cast<int>(x);
    enumerate_monomials_rec(nvars, var + 1, remaining - x, scratch, out);
  }
}

std::vector<Monomial> enumerate_monomials(int nvars, long long deg) {
  std::vector<Monomial> out;
  Monomial scratch = Monomial::one(nvars);
  enumerate_monomials_rec(nvars, 0, deg, scratch, out);
  return out;
}

Polynomial dense_random_form(int nvars, long long deg, long long bound, std::mt19937_64& rng) {
  Polynomial f(nvars);
  for (const auto& mono : enumerate_monomials(nvars, deg))
    f.add_term(mono, BigRat(rand_nonzero(rng, bound)));
  return f;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.times_term(L.quotient(f.leading_monomial()), BigRat(1) / f.leading_coeff());
  a -= g.times_term(L.quotient(g.leading_monomial()), BigRat(1) / g.leading_coeff());
  return a;
}

Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& basis) {
  Polynomial remainder(f.nvars());
  while (!f.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(f.leading_monomial())) {
        const Monomial q = f.leading_monomial().quotient(g.leading_monomial());
        f -= g.times_term(q, f.leading_coeff() / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      const Monomial lm = f.leading_monomial();
      const BigRat lc = f.leading_coeff();
      remainder.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return remainder;
}

BigRat det_rational(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRat>> w(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
  BigRat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(w[pivot], w[col]);
      det = -det;
    }
    det *= w[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (w[row][col] == 0) continue;
      const BigRat factor = w[row][col] / w[col][col];
      for (std::size_t j = col; j < n; ++j) w[row][j] -= factor * w[col][j];
    }
  }
  return det;
}

std::pair<Polynomial, Polynomial> random_ci_impl(const CIParams& p, const OracleConfig& cfg,
                                                 std::mt19937_64& rng) {
  for (int attempt = 0; attempt <= cfg.retry_limit; ++attempt) {
    Polynomial f = dense_random_form(static_cast<int>(p.m), p.alpha, cfg.coeff_bound, rng);
    Polynomial g = dense_random_form(static_cast<int>(p.m), p.beta, cfg.coeff_bound, rng);
    if (is_regular_pair(f, g, p)) return {std::move(f), std::move(g)};
  }
  fail(errc::regularity_failure,
       "random forms failed the regular-sequence check after retries (RNG pathology?)");
}

void check_desk_scale(const CIParams& p, bool check_n) {
  if (p.m > 3 || p.alpha > 3 || p.beta > 4)
    fail(errc::scale_exceeded, "oracle is desk-scale only: m <= 3, alpha <= 3, beta <= 4");
  if (check_n && p.n > 2) fail(errc::scale_exceeded, "oracle is desk-scale only: n <= 2");
}

}  // namespace

OracleConfig default_oracle_config(std::uint64_t seed) {
  OracleConfig cfg;
  cfg.seed = seed;
  if (const char* env = std::getenv("GINKIT_MAX_BASIS")) {
    const long long v = std::atoll(env);
    if (v > 0) cfg.max_basis_size = static_cast<std::size_t>(v);
  }
  return cfg;
}

long long homogeneous_piece_dim(const std::vector<Polynomial>& gens, long long t) {
  if (gens.empty() || t < 0) return 0;
  const int nvars = gens.front().nvars();
  const auto basis_monos = enumerate_monomials(nvars, t);
  std::map<Monomial, std::size_t, RevlexGreater> col_of;
  for (std::size_t i = 0; i < basis_monos.size(); ++i) col_of.emplace(basis_monos[i], i);

  std::vector<std::vector<BigRat>> rows;
  for (const auto& f : gens) {
    if (f.is_zero() || f.degree() > t) continue;
    for (const auto& u : enumerate_monomials(nvars, t - f.degree())) {
      std::vector<BigRat> row(basis_monos.size());
      for (const auto& [mono, coeff] : f.terms()) row[col_of.at(mono.times(u))] = coeff;
      rows.push_back(std::move(row));
    }
  }

  long long rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size() && col < basis_monos.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t rr = r + 1; rr < rows.size(); ++rr) {
      if (rows[rr][col] == 0) continue;
      const BigRat factor = rows[rr][col] / rows[r][col];
      for (std::size_t j = col; j < basis_monos.size(); ++j) rows[rr][j] -= factor * rows[r][j];
    }
    ++rank;
    ++r;
  }
  return rank;
}

bool is_regular_pair(const Polynomial& f, const Polynomial& g, const CIParams& p) {
  if (f.is_zero() || g.is_zero()) return false;
  if (f.degree() != p.alpha || g.degree() != p.beta) return false;
  CIParams first_power = p;
  first_power.n = 1;
  for (long long t = 0; t <= p.alpha + p.beta; ++t) {
    const BigInt expected = hilbert_In(first_power, t);
    if (BigInt(homogeneous_piece_dim({f, g}, t)) != expected) return false;
  }
  return true;
}

std::pair<Polynomial, Polynomial> random_ci(const CIParams& p, const OracleConfig& cfg) {
  validate_params(p);
  check_desk_scale(p, false);
  std::mt19937_64 rng(cfg.seed);
  return random_ci_impl(p, cfg, rng);
}

Polynomial apply_change_of_coords(const Polynomial& f,
                                  const std::vector<std::vector<long long>>& g_matrix) {
  const int nvars = f.nvars();
  if (g_matrix.size() != static_cast<std::size_t>(nvars))
    fail(errc::invalid_params, "change-of-coordinates matrix has wrong size");
  if (det_rational(g_matrix) == 0)
    fail(errc::invalid_params, "change-of-coordinates matrix is singular");

  std::vector<Polynomial> image(static_cast<std::size_t>(nvars), Polynomial(nvars));
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < nvars; ++j) {
      Monomial xj = Monomial::one(nvars);
      xj.e[static_cast<std::size_t>(j)] = 1;
      image[static_cast<std::size_t>(i)].add_term(xj, BigRat(g_matrix[i][j]));
    }

  // power cache per variable
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(nvars));
  auto power_of = [&](int var, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(var)];
    if (cache.empty()) cache.push_back(Polynomial::term(Monomial::one(nvars), 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * image[static_cast<std::size_t>(var)]);
    return cache[static_cast<std::size_t>(e)];
  };

  Polynomial result(nvars);
  for (const auto& [mono, coeff] : f.terms()) {
    Polynomial term_image = Polynomial::term(Monomial::one(nvars), coeff);
    for (int i = 0; i < nvars; ++i)
      if (mono.e[static_cast<std::size_t>(i)] > 0)
        term_image = term_image * power_of(i, mono.e[static_cast<std::size_t>(i)]);
    result += term_image;
  }
  return result;
}

std::vector<Polynomial> buchberger_revlex(std::vector<Polynomial> generators,
                                          std::size_t max_basis_size) {
  std::vector<Polynomial> basis;
  std::set<std::tuple<long long, std::size_t, std::size_t>> pairs;

  auto add_to_basis = [&](Polynomial f) {
    f.make_monic();
    const std::size_t idx = basis.size();
    for (std::size_t i = 0; i < idx; ++i) {
      const Monomial L = Monomial::lcm(basis[i].leading_monomial(), f.leading_monomial());
      pairs.emplace(L.degree(), i, idx);
    }
    basis.push_back(std::move(f));
    if (basis.size() > max_basis_size)
      fail(errc::cap_exceeded, "Groebner basis exceeded the size cap of " +
                                   std::to_string(max_basis_size));
  };

  for (auto& g : generators) {
    if (g.is_zero()) fail(errc::invalid_params, "zero generator passed to buchberger_revlex");
    Polynomial r = normal_form(std::move(g), basis);
    if (!r.is_zero()) add_to_basis(std::move(r));
  }

  while (!pairs.empty()) {
    const auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (basis[i].leading_monomial().is_coprime_with(basis[j].leading_monomial())) continue;
    Polynomial r = normal_form(spoly(basis[i], basis[j]), basis);
    if (!r.is_zero()) add_to_basis(std::move(r));
  }

  // minimalize: keep only elements whose leading monomial no kept element divides
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return revlex_less(basis[a].leading_monomial(), basis[b].leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (std::size_t idx : order) {
    const Monomial& lm = basis[idx].leading_monomial();
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.leading_monomial().divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(basis[idx]));
  }

  // inter-reduce tails; leading monomials are already pairwise non-divisible
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    r.make_monic();
    reduced.push_back(std::move(r));
  }
  return reduced;
}

std::vector<Monomial> initial_ideal_min_gens(const std::vector<Polynomial>& reduced_basis) {
  std::vector<Monomial> lms;
  lms.reserve(reduced_basis.size());
  for (const auto& f : reduced_basis) lms.push_back(f.leading_monomial());
  return lms;
}

bool is_strongly_stable(const std::vector<Monomial>& gens, int nvars) {
  auto in_ideal = [&](const Monomial& mono) {
    for (const auto& g : gens)
      if (g.divides(mono)) return true;
    return false;
  };
  for (const auto& g : gens)
    for (int i = 1; i < nvars; ++i) {
      if (g.e[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < i; ++j) {
        Monomial swapped = g;
        --swapped.e[static_cast<std::size_t>(i)];
        ++swapped.e[static_cast<std::size_t>(j)];
        if (!in_ideal(swapped)) return false;
      }
    }
  return true;
}

long long count_monomial_multiples(const std::vector<Monomial>& gens, int nvars, long long t) {
  long long count = 0;
  for (const auto& mono : enumerate_monomials(nvars, t)) {
    for (const auto& g : gens)
      if (g.divides(mono)) {
        ++count;
        break;
      }
  }
  return count;
}

StableIdeal oracle_gin_single_run(const CIParams& p, const OracleConfig& cfg,
                                  std::uint64_t seed) {
  validate_params(p);
  check_desk_scale(p, true);
  std::mt19937_64 rng(seed);
  auto [f, g] = random_ci_impl(p, cfg, rng);

  const int nvars = static_cast<int>(p.m);
  std::vector<std::vector<long long>> matrix(static_cast<std::size_t>(nvars),
                                             std::vector<long long>(static_cast<std::size_t>(nvars)));
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100) fail(errc::internal, "could not sample an invertible matrix");
    for (auto& row : matrix)
      for (auto& entry : row) entry = rand_range(rng, -cfg.coeff_bound, cfg.coeff_bound);
    if (det_rational(matrix) != 0) break;
  }

  const Polynomial fg = apply_change_of_coords(f, matrix);
  const Polynomial gg = apply_change_of_coords(g, matrix);

  std::vector<Polynomial> gens;
  for (long long i = 0; i <= p.n; ++i) {
    Polynomial prod = fg.pow(i) * gg.pow(p.n - i);
    prod.make_monic();
    gens.push_back(std::move(prod));
  }

  const auto basis = buchberger_revlex(std::move(gens), cfg.max_basis_size);
  auto lms = initial_ideal_min_gens(basis);

  for (const auto& lm : lms)
    for (std::size_t v = 2; v < lm.e.size(); ++v)
      if (lm.e[v] != 0)
        fail(errc::unstable, "initial ideal involves variables beyond x1, x2 "
                             "(coordinates fell outside the generic set)");

  std::sort(lms.begin(), lms.end(),
            [](const Monomial& a, const Monomial& b) { return a.e[0] > b.e[0]; });
  if (lms.empty() || lms.front().e[1] != 0)
    fail(errc::unstable, "initial ideal lacks a pure power of x1");
  const long long k = lms.front().e[0];
  if (static_cast<long long>(lms.size()) != k + 1)
    fail(errc::unstable, "initial ideal does not have k+1 minimal generators");
  StableIdeal ideal;
  ideal.k = k;
  ideal.lambdas.assign(static_cast<std::size_t>(k), 0);
  for (long long idx = 1; idx <= k; ++idx) {
    const Monomial& lm = lms[static_cast<std::size_t>(idx)];
    if (lm.e[0] != k - idx) fail(errc::unstable, "initial ideal x-exponents are not a full ladder");
    ideal.lambdas[static_cast<std::size_t>(k - idx)] = lm.e[1];
  }
  return ideal;
}

StableIdeal oracle_gin(const CIParams& p, const OracleConfig& cfg) {
  validate_params(p);
  check_desk_scale(p, true);
  std::vector<StableIdeal> seen;
  int disagreements = 0;
  for (std::uint64_t i = 0;; ++i) {
    if (i > static_cast<std::uint64_t>(cfg.retry_limit) + 1)
      fail(errc::unstable, "oracle runs kept disagreeing across seeds");
    try {
      StableIdeal run = oracle_gin_single_run(p, cfg, cfg.seed + i);
      for (const auto& prev : seen)
        if (prev == run) return run;
      if (!seen.empty()) ++disagreements;
      if (disagreements > cfg.retry_limit)
        fail(errc::unstable, "oracle runs kept disagreeing across seeds");
      seen.push_back(std::move(run));
    } catch (const error& e) {
      if (e.code() != errc::unstable) throw;
      ++disagreements;
      if (disagreements > cfg.retry_limit) throw;
    }
  }
}

}  // namespace ginkit
