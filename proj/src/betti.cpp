#include "betti.hpp"

#include <algorithm>
#include <iterator>

namespace ginkit {

GradedBetti betti_In(const CIParams& p) {
  validate_params(p);
  GradedBetti b;
  for (long long q = 0; q <= p.n; ++q) b.b0.insert(p.alpha * q + p.beta * (p.n - q));
  for (long long q = 1; q <= p.n; ++q) b.b1.insert(p.alpha * q + p.beta * (p.n + 1 - q));
  return b;
}

GradedBetti betti_J(const StableIdeal& ideal) {
  GradedBetti b;
  b.b0.insert(ideal.k);
  for (long long i = 0; i < ideal.k; ++i) {
    const long long shift = ideal.lambdas[static_cast<std::size_t>(i)] + i;
    b.b0.insert(shift);
    b.b1.insert(shift + 1);
  }
  return b;
}

namespace {

// in_set subseteq gin_set as multisets; on success fills diff = gin - in.
bool multiset_diff(const std::multiset<long long>& gin_set, const std::multiset<long long>& in_set,
                   std::multiset<long long>& diff) {
  if (!std::includes(gin_set.begin(), gin_set.end(), in_set.begin(), in_set.end())) return false;
  std::set_difference(gin_set.begin(), gin_set.end(), in_set.begin(), in_set.end(),
                      std::inserter(diff, diff.begin()));
  return true;
}

}  // namespace

bool check_cancellation(const GradedBetti& gin_table, const GradedBetti& in_table) {
  std::multiset<long long> d0, d1;
  if (!multiset_diff(gin_table.b0, in_table.b0, d0)) return false;
  if (!multiset_diff(gin_table.b1, in_table.b1, d1)) return false;
  return d0 == d1;
}

}  // namespace ginkit
