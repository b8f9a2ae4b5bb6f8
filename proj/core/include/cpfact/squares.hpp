#pragma once

#include "cpfact/matrix.hpp"

namespace cpfact {

// A representation x = s_1^2 + ... + s_m^2 with s_1 >= s_2 >= ... >= s_m > 0.
// When minimal is true, m is the least possible (0 <= m <= 4 by Lagrange).
struct SquareDecomp {
    int64 target{0};
    std::vector<int64> parts;
    bool minimal{false};
};

// True iff x = 4^r (8k+7) for nonnegative r, k; these are exactly the
// integers that need four squares. False for x = 0.
bool is_form_4r8k7(int64 x);

// True iff every prime p = 3 (mod 4) divides x to an even power, i.e. x is
// a sum of two squares (zero allowed among them). Uses trial division, so
// keep inputs at desk scale (documented CLI cap: x <= 2^48).
bool is_sum_of_two_squares(int64 x);

// Least number of positive squares summing to x:
// 0 for x = 0, 1 for perfect squares, 2 by the two-square criterion,
// 4 on the 4^r(8k+7) set, 3 otherwise.
int min_square_count(int64 x);

// Minimal decomposition in canonical form. Deterministic: among minimal
// representations, the lexicographically greatest sorted parts list
// (greedy-largest-first).
SquareDecomp decompose(int64 x);

// Self-check for the neighbor exclusion property: if x is of the four-square
// form, then none of x-2, x-6, x+2, x+6 (those >= 0) are. Vacuously true
// when x is not of that form. Expected true for every x.
bool neighbor_excluded(int64 x);

}  // namespace cpfact
