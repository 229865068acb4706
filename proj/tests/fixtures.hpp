#pragma once

#include <vector>

#include "types.hpp"

namespace ginkit::testing {

struct Fixture {
  CIParams params;
  std::vector<long long> lambdas;
};

// Twelve reference sequences, two per case, frozen from hand-running each
// algorithm and certified by the Hilbert-equality sweep.  Note (10,14,4) has
// 61 in position 2 (the gap listing 2,2,2,2,... forces it), and (6,8,3) and
// (3,3,5) have 18 and 15 entries.
inline const std::vector<Fixture>& golden_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {{4, 12, 3, 2}, {39, 37, 35, 33, 27, 25, 23, 21, 15, 13, 11, 9}},
      {{4, 9, 4, 2}, {39, 37, 35, 33, 30, 28, 26, 24, 21, 19, 17, 15, 12, 10, 8, 6}},
      {{6, 10, 5, 2}, {55, 53, 51, 49, 47, 46, 44, 43, 41, 39, 37, 36, 34, 33, 31,
                       29, 27, 26, 24, 23, 21, 19, 17, 16, 14, 13, 11, 9, 7, 5}},
      {{7, 12, 4, 2}, {54, 52, 50, 48, 46, 44, 43, 41, 40, 38, 36, 34, 32, 31,
                       29, 28, 26, 24, 22, 20, 19, 17, 16, 14, 12, 10, 8, 6}},
      {{12, 15, 5, 2}, {86, 84, 82, 80, 79, 77, 76, 74, 73, 71, 70, 69, 67, 66, 65,
                        63, 62, 61, 59, 58, 57, 56, 54, 53, 52, 51, 49, 48, 47, 46,
                        44, 43, 42, 41, 39, 38, 37, 36, 34, 33, 32, 31, 29, 28, 27,
                        25, 24, 23, 21, 20, 19, 17, 16, 14, 13, 11, 10, 8, 6, 4}},
      {{9, 12, 4, 2}, {56, 54, 52, 50, 49, 47, 46, 44, 43, 41, 40, 39, 37, 36, 35,
                       33, 32, 31, 29, 28, 27, 25, 24, 23, 21, 20, 19, 17, 16, 14,
                       13, 11, 10, 8, 6, 4}},
      {{10, 14, 4, 2}, {65, 63, 61, 59, 57, 56, 54, 53, 51, 50, 48, 47, 45, 44,
                        43, 41, 40, 39, 37, 36, 34, 33, 31, 30, 29, 27, 26, 25,
                        23, 22, 20, 19, 17, 16, 14, 13, 11, 9, 7, 5}},
      {{7, 9, 6, 2}, {60, 58, 56, 55, 53, 52, 50, 49, 48, 46, 45, 44, 42, 41,
                      40, 39, 37, 36, 35, 33, 32, 31, 30, 28, 27, 26, 24, 23,
                      22, 21, 19, 18, 17, 15, 14, 13, 11, 10, 8, 7, 5, 3}},
      {{6, 8, 3, 2}, {29, 27, 25, 24, 22, 21, 19, 18, 17, 15, 14, 13, 11, 10, 8, 7, 5, 3}},
      {{7, 10, 2, 2}, {26, 24, 22, 20, 19, 17, 16, 14, 13, 11, 10, 8, 6, 4}},
      {{3, 3, 5, 2}, {17, 16, 15, 14, 13, 11, 10, 9, 8, 7, 5, 4, 3, 2, 1}},
      {{4, 4, 2, 2}, {11, 10, 8, 7, 5, 4, 2, 1}},
  };
  return fixtures;
}

// alpha in 1..8, beta in alpha..2*alpha+6, n in 1..6, m in {2,3,4,5}
inline std::vector<CIParams> acceptance_grid() {
  std::vector<CIParams> grid;
  for (long long a = 1; a <= 8; ++a)
    for (long long b = a; b <= 2 * a + 6; ++b)
      for (long long n = 1; n <= 6; ++n)
        for (long long m : {2, 3, 4, 5}) grid.push_back({a, b, n, m});
  return grid;
}

}  // namespace ginkit::testing
