#pragma once

#include <cstdint>
#include <stdexcept>

#include "cpfact/matrix.hpp"

namespace cpfact {

struct SearchOptions {
    std::uint64_t node_budget = 100'000'000;
    // Desk-scale guard on the diagonal; raise explicitly for larger runs.
    int64 diag_cap = 512;
    // Admissible prunes. Disabling them changes node counts, never answers.
    bool dnn_prune = true;
    bool coverage_prune = true;
};

enum class RankMethod { Exact, UpperBound };

struct RankReport {
    int rank{0};
    Factorization certificate;
    RankMethod method{RankMethod::Exact};
    std::uint64_t nodes_explored{0};
};

// Node budget ran out. Carries the best-known bounds; never a wrong answer.
struct inconclusive_error : std::runtime_error {
    inconclusive_error(int lo, int hi, std::uint64_t nodes)
        : std::runtime_error("search inconclusive: rank in [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "] after " +
                             std::to_string(nodes) + " nodes"),
          lower(lo), upper(hi), nodes(nodes) {}
    int lower;
    int upper;
    std::uint64_t nodes;
};

// Exact integer cp-rank by iterative deepening DFS over canonical
// (non-increasing) column multisets, after unimodular reduction. The upper
// bound from factor() caps the deepening; any remainder must stay doubly
// nonnegative.
RankReport exact_cp_rank(const Mat2& m, const SearchOptions& opts = {});

// Differential check of the rank-1 formula against the search:
// exact rank of d * (v v^T) equals rank1_cp_rank of the same matrix.
bool exact_matches_formula_rank1(int64 d, const VecN& v,
                                 const SearchOptions& opts = {});

}  // namespace cpfact
