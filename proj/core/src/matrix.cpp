#include "cpfact/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpfact {

int64 checked_add(int64 x, int64 y) {
    int64 r;
    if (__builtin_add_overflow(x, y, &r))
        throw std::overflow_error("integer addition out of range");
    return r;
}

int64 checked_mul(int64 x, int64 y) {
    int64 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("integer multiplication out of range");
    return r;
}

int64 isqrt(int64 x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative number");
    if (x < 2) return x;
    auto s = static_cast<int64>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s > x / s) --s;
    while ((s + 1) <= x / (s + 1)) ++s;
    return s;
}

bool is_perfect_square(int64 x) {
    if (x < 0) return false;
    int64 s = isqrt(x);
    return s * s == x;
}

int64 Mat2::det() const {
    return checked_add(checked_mul(a, c), -checked_mul(b, b));
}

MatN::MatN(std::size_t n) : n_(n), e_(n * n, 0) {}

MatN MatN::from_rows(const std::vector<std::vector<int64>>& rows) {
    std::size_t n = rows.size();
    MatN m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] < 0)
                throw std::invalid_argument("matrix has a negative entry");
            m.e_[i * n + j] = rows[i][j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("matrix is not symmetric");
    return m;
}

void MatN::set(std::size_t i, std::size_t j, int64 v) {
    if (v < 0) throw std::invalid_argument("matrix entries must be nonnegative");
    e_[i * n_ + j] = v;
    e_[j * n_ + i] = v;
}

bool MatN::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int64 v) { return v == 0; });
}

bool is_dnn(const Mat2& m) {
    if (m.a < 0 || m.b < 0 || m.c < 0) return false;
    return m.det() >= 0;
}

void require_dnn(const Mat2& m) {
    if (m.a < 0 || m.b < 0 || m.c < 0)
        throw std::invalid_argument("matrix is not nonnegative");
    if (m.det() < 0)
        throw std::invalid_argument("not PSD: " + std::to_string(m.a) + "*" +
                                    std::to_string(m.c) + " < " +
                                    std::to_string(m.b) + "^2");
}

bool is_rank1_dnn(const MatN& m) {
    std::size_t n = m.order();
    if (m.is_zero()) return true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (checked_mul(m.at(i, j), m.at(i, j)) !=
                checked_mul(m.at(i, i), m.at(j, j)))
                return false;
    return true;
}

namespace {

template <typename Get>
bool verify_impl(std::size_t n, Get entry, const Factorization& f) {
    for (const VecN& col : f.columns) {
        if (col.size() != n)
            throw std::invalid_argument("factorization column length mismatch");
        for (int64 v : col)
            if (v < 0)
                throw std::invalid_argument("factorization column has a negative entry");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            int64 sum = 0;
            for (const VecN& col : f.columns)
                sum = checked_add(sum, checked_mul(col[i], col[j]));
            if (sum != entry(i, j)) return false;
        }
    }
    return true;
}

}  // namespace

bool verify(const Mat2& m, const Factorization& f) {
    auto entry = [&](std::size_t i, std::size_t j) {
        if (i == j) return i == 0 ? m.a : m.c;
        return m.b;
    };
    return verify_impl(2, entry, f);
}

bool verify(const MatN& m, const Factorization& f) {
    return verify_impl(m.order(),
                       [&](std::size_t i, std::size_t j) { return m.at(i, j); },
                       f);
}

bool equivalent(const Factorization& f, const Factorization& g) {
    auto a = f.columns;
    auto b = g.columns;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace cpfact
