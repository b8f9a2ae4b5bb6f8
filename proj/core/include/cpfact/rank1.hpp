#pragma once

#include "cpfact/matrix.hpp"
#include "cpfact/squares.hpp"

namespace cpfact {

// Certificate for the rank-1 factorization: A = d * (base base^T) with d the
// gcd of the diagonal. Every diagonal entry of A/d is a perfect square, so
// base is its entrywise integer square root.
struct Rank1Cert {
    int64 d{0};
    VecN base;
    SquareDecomp squares;
};

Rank1Cert rank1_certificate(const MatN& m);

// Columns s_k * base for each part s_k of decompose(d). The column count,
// min_square_count(d), is the exact integer cp-rank of m.
Factorization factor_rank1(const MatN& m);

int rank1_cp_rank(const MatN& m);

}  // namespace cpfact
