#pragma once

#include <set>

#include "types.hpp"

namespace ginkit {

// Shift multisets of a length-2 minimal free resolution: b0 holds the shifts
// in homological degree 0, b1 those in degree 1.
struct GradedBetti {
  std::multiset<long long> b0;
  std::multiset<long long> b1;

  friend bool operator==(const GradedBetti&, const GradedBetti&) = default;
};

// Resolution of I^n: b0 = {alpha p + beta (n-p) : p = 0..n},
// b1 = {alpha p + beta (n+1-p) : p = 1..n}.
GradedBetti betti_In(const CIParams& p);

// Eliahou-Kervaire shifts of a stable ideal:
// b0 = {lambda_i + i : i = 0..k-1} u {k}, b1 = {lambda_i + i + 1}.
GradedBetti betti_J(const StableIdeal& ideal);

// With only two homological degrees, a series of consecutive cancellations
// from gin's table to I^n's exists exactly when I^n's shifts embed in gin's
// (as multisets) and the leftovers match degree-for-degree.
bool check_cancellation(const GradedBetti& gin_table, const GradedBetti& in_table);

}  // namespace ginkit
