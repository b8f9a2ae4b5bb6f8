#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cpfact {

using int64 = std::int64_t;

// Checked integer helpers. All arithmetic in this library is exact; any
// operation that would leave the int64 range throws std::overflow_error
// instead of wrapping.
int64 checked_add(int64 x, int64 y);
int64 checked_mul(int64 x, int64 y);

// Exact floor square root, x >= 0. Never goes through floating point
// without an exact integer correction step.
int64 isqrt(int64 x);
bool is_perfect_square(int64 x);

// A symmetric 2x2 integer matrix [[a, b], [b, c]].
struct Mat2 {
    int64 a{0};
    int64 b{0};
    int64 c{0};

    friend bool operator==(const Mat2&, const Mat2&) = default;

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    // det = a*c - b*b, overflow-checked.
    int64 det() const;
};

// A symmetric entrywise-nonnegative n x n integer matrix. Symmetry and
// nonnegativity are validated at construction.
class MatN {
  public:
    explicit MatN(std::size_t n);
    static MatN from_rows(const std::vector<std::vector<int64>>& rows);

    std::size_t order() const { return n_; }
    int64 at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, int64 v);

    bool is_zero() const;

    friend bool operator==(const MatN&, const MatN&) = default;

  private:
    std::size_t n_;
    std::vector<int64> e_;
};

// A column of the factor V in A = V V^T. Length 2 in the Mat2 pipeline,
// length n for the rank-1 general case.
using VecN = std::vector<int64>;

// An ordered list of nonnegative integer columns whose outer-product sum
// reconstructs the source matrix, plus a provenance tag ("base",
// "tpl(x,y,beta)", "rank1", "oracle").
struct Factorization {
    std::vector<VecN> columns;
    std::string method;

    std::size_t size() const { return columns.size(); }
};

// Entrywise nonnegative and positive semidefinite (a*c >= b^2).
bool is_dnn(const Mat2& m);

// True iff m is zero or rank-1 PSD, checked exactly via
// a_ij^2 = a_ii * a_jj for all i, j.
bool is_rank1_dnn(const MatN& m);

// Exact reconstruction check: sum of outer products of the columns equals
// the matrix entrywise. Dimension mismatch throws, it is not "false".
bool verify(const Mat2& m, const Factorization& f);
bool verify(const MatN& m, const Factorization& f);

// Factorizations are compared as multisets of columns.
bool equivalent(const Factorization& f, const Factorization& g);

// Throws std::invalid_argument naming the violated invariant
// (negativity vs. "not PSD: a*c < b^2").
void require_dnn(const Mat2& m);

}  // namespace cpfact
