#include "closed_form.hpp"

#include <vector>

#include "algorithms.hpp"

namespace ginkit {

namespace {

using Coords = std::vector<std::pair<std::string, long long>>;

struct Candidate {
  long long value;
  PhaseTag phase;
  const char* family;
  Coords coords;
};

long long tri(long long q) { return q * (q + 1) / 2; }  // 1 + 2 + ... + q

void far_candidates(const CIParams& p, long long v,
                    std::vector<Candidate>& out) {
  const long long j = v / p.alpha, s = v % p.alpha;
  const long long value = (p.n - j) * p.beta + p.alpha - 1 - 2 * s;
  PhaseTag ph;
  if (s == 0)
    ph = j >= 1 ? PhaseTag::pattern(j - 1) : PhaseTag::pattern(0);
  else
    ph = j <= p.n - 2 ? PhaseTag::pattern(j) : PhaseTag::partial_pattern();
  out.push_back({value, ph, "Far", {{"j", j}, {"s", s}}});
}

void equal_candidates(const CIParams& p, long long v, std::vector<Candidate>& out) {
  const long long q = v / p.n, j = v % p.n;
  const long long value = (p.n + 1) * p.alpha - 1 - q * (p.n + 1) - j;
  PhaseTag ph;
  if (j == 0)
    ph = q >= 1 ? PhaseTag::pattern(q - 1) : PhaseTag::pattern(0);
  else
    ph = q <= p.alpha - 2 ? PhaseTag::pattern(q) : PhaseTag::partial_pattern();
  out.push_back({value, ph, "Equal", {{"q", q}, {"j", j}}});
}

void mid_candidates(const CIParams& p, const DerivedParams& d, long long v,
                    std::vector<Candidate>& out) {
  const long long l = d.l, r = d.r, k = d.k;
  if (v <= l)
    out.push_back({d.lambda0 - 2 * v, PhaseTag::build(), "Build", {{"v", v}}});
  if (v >= l + 1 && v <= k - l - 2) {
    const long long w = v - l;
    const long long j = w / p.alpha, y = w % p.alpha;
    if (y == 0) {
      out.push_back({d.lambda0 - (j * (l + p.alpha) + 2 * l), PhaseTag::pattern(j - 1),
                     "Pattern", {{"j", j}}});
    } else if (y >= 2 * r - 1) {
      out.push_back({d.lambda0 - (2 * l + (p.alpha + l) * j + 2 * y - r), PhaseTag::pattern(j),
                     "Pattern", {{"j", j}, {"y", y}}});
    } else {
      const PhaseTag ph = j <= p.n - 3 ? PhaseTag::pattern(j) : PhaseTag::partial_pattern();
      const long long q = (y + 1) / 2;
      if (y % 2 == 0)
        out.push_back({d.lambda0 - (2 * l + (p.alpha + l) * j + 3 * (y / 2)), ph, "Pattern",
                       {{"j", j}, {"p", y / 2}}});
      else
        out.push_back({d.lambda0 - (2 * l + (p.alpha + l) * j + 3 * q - 2), ph, "Pattern",
                       {{"j", j}, {"p", q}}});
    }
  }
  if (v >= k - l - 1) {
    const long long i = k - v;  // 1 .. l+1
    const PhaseTag ph =
        v == k - l - 1 ? PhaseTag::partial_pattern() : PhaseTag::reverse_build();
    out.push_back({d.lambda_last + 2 * (i - 1), ph, "ReverseBuild", {{"i", i}}});
  }
}

// Build-phase formulas shared by the three Close cases; cc is c for the
// divides / not-divides cases and n for the small-n case.
void close_build(const DerivedParams& d, long long cc, long long v,
                 std::vector<Candidate>& out) {
  const long long l = d.l;
  if (v <= l) {
    out.push_back({d.lambda0 - 2 * v, PhaseTag::build(), "Build", {{"v", v}}});
    return;
  }
  if (cc < 3 || v > l * tri(cc - 1)) return;
  long long q = 1;
  while (l * tri(q + 1) < v) ++q;  // q <= cc - 2 since v <= l * tri(cc - 1)
  const long long pp = v - l * tri(q);         // 1 .. (q+1) l
  const long long j = (pp + q) / (q + 1);      // 1 .. l
  const long long x = (q + 1) * j - pp;        // 0 .. q
  const long long S = tri(q + 1) - 1;          // 2 + ... + (q+1)
  if (x == 0)
    out.push_back({d.lambda0 - (S * l + (q + 1) * j + j), PhaseTag::build(), "Build",
                   {{"q", q}, {"j", j}}});
  else
    out.push_back({d.lambda0 - (S * l + (q + 1) * j - x + j - 1), PhaseTag::build(), "Build",
                   {{"q", q}, {"j", j}, {"x", x}}});
}

// Pattern formulas for the divides / small-n cases: reps repeats of a single
// onestwo(cc-1) unit.  The closing index of the final unit carries the same
// linear formula, so j runs up to reps.
void close_pattern(const DerivedParams& d, long long cc, long long reps, long long v,
                   std::vector<Candidate>& out) {
  const long long E = d.l * tri(cc - 1);
  const long long Bv = d.l * (tri(cc) - 1);
  if (v <= E || v > E + reps * cc) return;
  const long long w = v - E;
  const long long j = w / cc, i = w % cc;
  if (i == 0)
    out.push_back({d.lambda0 - Bv - j * (cc + 1), PhaseTag::pattern(j - 1), "Pattern",
                   {{"j", j}}});
  else
    out.push_back({d.lambda0 - Bv - (j * (cc + 1) + i), PhaseTag::pattern(j), "Pattern",
                   {{"j", j}, {"i", i}}});
}

// Pattern formulas for the not-divides case: blocks of length alpha made of
// d onestwo(c-1) units then (l-d) onestwo(c-2) units, plus a final partial
// block of d onestwo(c-1) units.
void close_nd_pattern(const CIParams& p, const DerivedParams& d, long long v,
                      std::vector<Candidate>& out) {
  const long long c = *d.c, dd = *d.d, l = d.l;
  const long long E = l * tri(c - 1);
  const long long Bv = l * (tri(c) - 1);
  const long long top = E + (p.n - c) * p.alpha + dd * c;
  if (v <= E || v > top) return;
  const long long w = v - E;
  const long long pb = (w - 1) / p.alpha;
  const long long pos = w - pb * p.alpha;  // 1 .. alpha
  const PhaseTag ph =
      pb <= p.n - c - 1 ? PhaseTag::pattern(pb) : PhaseTag::partial_pattern();
  long long off = pb * (l + p.alpha);
  Coords coords{{"p", pb}};
  if (pos <= dd * c) {
    const long long j = pos / c, i = pos % c;
    off += j * (c + 1) + i;
    coords.emplace_back("j", j);
    if (i != 0) coords.emplace_back("i", i);
  } else {
    const long long pos2 = pos - dd * c;
    const long long j = pos2 / (c - 1), i = pos2 % (c - 1);
    off += dd * (c + 1) + j * c + i;
    coords.emplace_back("j", j);
    if (i != 0) coords.emplace_back("i", i);
  }
  out.push_back({d.lambda0 - Bv - off, ph, "Pattern", std::move(coords)});
}

// Reverse-phase formulas shared by the three Close cases, anchored at
// lambda_{k-1} = l + 1.  The indices with q = cc-2, j = l, x <= 1 belong to
// the Pattern and are excluded here.
void close_reverse(const DerivedParams& d, long long cc, long long pattern_len, long long v,
                   std::vector<Candidate>& out) {
  const long long l = d.l, k = d.k;
  const long long T = (k - 1) - v;
  if (T < 0 || T > l * tri(cc - 1)) return;
  const long long rbp_count = (cc - 2) + (l - 1) * (cc - 1);
  const long long rb_start = l * tri(cc - 1) + pattern_len + 1;
  const PhaseTag ph = v < rb_start + rbp_count ? PhaseTag::reverse_build_partial()
                                               : PhaseTag::reverse_build();
  if (T <= l) {
    out.push_back({d.lambda_last + 2 * T, ph, "ReverseBuild", {{"j", T}}});
    return;
  }
  long long q = 1;
  while (l * tri(q + 1) < T) ++q;
  const long long pp = T - l * tri(q);
  const long long j = (pp + q) / (q + 1);
  const long long x = (q + 1) * j - pp;
  if (q == cc - 2 && j == l && x <= 1) return;  // in the Pattern
  const long long S = tri(q + 1) - 1;
  if (x == 0)
    out.push_back({d.lambda_last + (S * l + (q + 1) * j + j), ph, "ReverseBuild",
                   {{"q", q}, {"j", j}}});
  else
    out.push_back({d.lambda_last + (S * l + (q + 1) * j - x + j - 1), ph, "ReverseBuild",
                   {{"q", q}, {"j", j}, {"x", x}}});
}

std::vector<Candidate> candidates_for(const CIParams& p, const DerivedParams& d, long long v) {
  std::vector<Candidate> out;
  switch (dispatch_case(p)) {
    case CaseTag::Far:
      far_candidates(p, v, out);
      break;
    case CaseTag::Equal:
      equal_candidates(p, v, out);
      break;
    case CaseTag::SinglePowerGeneric:
      out.push_back({d.lambda0 - 2 * v, PhaseTag::partial_pattern(), "SinglePowerGeneric",
                     {{"v", v}}});
      break;
    case CaseTag::Mid:
      mid_candidates(p, d, v, out);
      break;
    case CaseTag::CloseDivides: {
      const long long cc = *d.c, reps = p.n * d.l - p.alpha + d.l;
      close_build(d, cc, v, out);
      close_pattern(d, cc, reps, v, out);
      close_reverse(d, cc, reps * cc, v, out);
      break;
    }
    case CaseTag::CloseSmallN: {
      const long long cc = p.n, reps = p.beta - p.n * d.l;
      close_build(d, cc, v, out);
      close_pattern(d, cc, reps, v, out);
      close_reverse(d, cc, reps * cc, v, out);
      break;
    }
    case CaseTag::CloseNotDivides: {
      const long long cc = *d.c;
      close_build(d, cc, v, out);
      close_nd_pattern(p, d, v, out);
      close_reverse(d, cc, (p.n - cc) * p.alpha + *d.d * cc, v, out);
      break;
    }
  }
  return out;
}

Candidate resolve(const CIParams& p, const DerivedParams& d, long long v) {
  auto cands = candidates_for(p, d, v);
  if (cands.empty())
    fail(errc::coverage_gap, "no formula range covers v=" + std::to_string(v));
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (cands[i].value != cands[0].value)
      fail(errc::coverage_gap, "overlapping formula ranges disagree at v=" + std::to_string(v) +
                                   ": " + std::to_string(cands[0].value) + " vs " +
                                   std::to_string(cands[i].value));
  return cands[0];
}

void check_range(const DerivedParams& d, long long v) {
  if (v < 0 || v >= d.k)
    fail(errc::index_out_of_range,
         "v=" + std::to_string(v) + " outside [0, " + std::to_string(d.k - 1) + "]");
}

}  // namespace

long long lambda_closed(const CIParams& p, long long v) {
  const auto d = derive(p);
  check_range(d, v);
  return resolve(p, d, v).value;
}

ClosedFormIndex decompose(const CIParams& p, long long v) {
  const auto d = derive(p);
  check_range(d, v);
  auto c = resolve(p, d, v);
  return ClosedFormIndex{v, c.family, std::move(c.coords)};
}

InvariantSequence full_sequence_closed(const CIParams& p) {
  const auto d = derive(p);
  InvariantSequence seq;
  seq.params = p;
  seq.lambdas.reserve(static_cast<std::size_t>(d.k));
  seq.phases.reserve(static_cast<std::size_t>(d.k));
  for (long long v = 0; v < d.k; ++v) {
    const auto c = resolve(p, d, v);
    seq.lambdas.push_back(c.value);
    seq.phases.push_back(c.phase);
  }
  if (seq.phases.size() >= 2) seq.phases[0] = seq.phases[1];
  return seq;
}

}  // namespace ginkit
