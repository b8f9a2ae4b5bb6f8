#pragma once

#include <utility>

#include "cpfact/matrix.hpp"
#include "cpfact/squares.hpp"

namespace cpfact {

// One unimodular congruence step A -> S A S^T with S = [[1, -alpha], [0, 1]]
// (Upper: shrinks b against c) or its transpose analogue (Lower: against a).
enum class Side { Upper, Lower };

struct ReduceStep {
    Side side{Side::Upper};
    int64 alpha{1};

    friend bool operator==(const ReduceStep&, const ReduceStep&) = default;
};

// Replaying the inverse steps (entrywise nonnegative) maps any factorization
// of the reduced matrix back to one of the original with the same column
// count.
struct TransformLog {
    std::vector<ReduceStep> steps;
};

// Euclidean-style reduction to b <= min(a, c). Preserves the determinant;
// b strictly decreases each iteration. When both diagonal entries are
// exceeded, reduces against the smaller one (ties go to c).
std::pair<Mat2, TransformLog> reduce(const Mat2& m);

// Maps a factorization of the reduced matrix to one of the original by
// applying the inverse steps in reverse order.
Factorization replay(const TransformLog& log, Factorization f);

// A decomposition shape A = diag(d1, d2) + beta*J + (x,y)(x,y)^T with
// d1 = a - beta - x^2, d2 = c - beta - y^2 and beta + x*y = b.
struct Template {
    int64 x{0};
    int64 y{0};
    int64 beta{0};
    int columns_bound{0};

    friend bool operator==(const Template&, const Template&) = default;
};

int64 template_d1(const Mat2& m, const Template& t);
int64 template_d2(const Mat2& m, const Template& t);

// Expands a feasible template into explicit columns: (s,s) per part of beta,
// the mixed column (x,y), (s,0) per part of d1, (0,s) per part of d2.
Factorization realize_template(const Mat2& m, const Template& t);

// b*J + diag(a-b, 0) + diag(0, c-b), each piece via decompose().
// At most 12 columns. Requires b <= min(a, c).
Factorization base_template(const Mat2& m);

// The guaranteed templates for the hard case where b, a-b and c-b all need
// four squares: (3,2,b-6) when a-b != 7 (mod 8), (2,3,b-6) when
// c-b != 7 (mod 8), and (1,2,b-2) when both are 7 (mod 8). Empty list when
// the four-square gate does not apply. Requires b <= min(a, c).
std::vector<Template> theorem_templates(const Mat2& m);

// Full pipeline: reduce, pick the cheapest reconstruction among the base
// template, the guaranteed templates and a micro-search over small (x, y),
// then replay the log. Always at most 11 columns, verified exactly.
Factorization factor(const Mat2& m);

// Column count of factor(m).
int cp_rank_upper(const Mat2& m);

}  // namespace cpfact
