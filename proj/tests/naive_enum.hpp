#pragma once

// Reference enumerator for small instances: iterative deepening over
// canonical column multisets with no reduction and no pruning beyond
// nonnegativity of the remainder. Deliberately independent of the oracle.

#include <limits>
#include <stdexcept>

#include "cpfact/matrix.hpp"

namespace cpfact_test {

using cpfact::int64;
using cpfact::isqrt;
using cpfact::Mat2;

inline bool naive_dfs(const Mat2& rem, int depth_left, int64 last_x, int64 last_y) {
    if (rem.is_zero()) return true;
    if (depth_left == 0) return false;
    int64 xcap = std::min(last_x, isqrt(rem.a));
    for (int64 x = xcap; x >= 0; --x) {
        int64 ytop = (x == last_x) ? std::min(last_y, isqrt(rem.c)) : isqrt(rem.c);
        for (int64 y = ytop; y >= 0; --y) {
            if (x == 0 && y == 0) continue;
            if (x * y > rem.b) continue;
            if (naive_dfs(Mat2{rem.a - x * x, rem.b - x * y, rem.c - y * y},
                          depth_left - 1, x, y))
                return true;
        }
    }
    return false;
}

inline int naive_cp_rank(const Mat2& m, int max_depth = 12) {
    constexpr int64 inf = std::numeric_limits<int64>::max();
    for (int k = 0; k <= max_depth; ++k)
        if (naive_dfs(m, k, inf, inf)) return k;
    throw std::logic_error("naive enumerator found no factorization");
}

}  // namespace cpfact_test
