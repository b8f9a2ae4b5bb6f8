#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "cpfact/rank1.hpp"

using namespace cpfact;

namespace {

MatN scaled_outer(int64 d, const VecN& v) {
    MatN m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i; j < v.size(); ++j)
            m.set(i, j, d * v[i] * v[j]);
    return m;
}

}  // namespace

TEST_CASE("factor_rank1 examples") {
    auto f = factor_rank1(MatN::from_rows({{4, 6}, {6, 9}}));
    CHECK(f.columns == std::vector<VecN>{{2, 3}});

    f = factor_rank1(MatN::from_rows({{3, 3}, {3, 3}}));
    CHECK(f.columns == std::vector<VecN>(3, VecN{1, 1}));

    f = factor_rank1(MatN::from_rows({{2, 2}, {2, 2}}));
    CHECK(f.columns == std::vector<VecN>(2, VecN{1, 1}));

    CHECK(factor_rank1(MatN::from_rows({{0, 0}, {0, 0}})).columns.empty());
    CHECK_THROWS_AS(factor_rank1(MatN::from_rows({{1, 0}, {0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("rank1_cp_rank examples") {
    CHECK(rank1_cp_rank(MatN::from_rows({{7, 7}, {7, 7}})) == 4);
    CHECK(rank1_cp_rank(MatN::from_rows({{1}})) == 1);
    CHECK(rank1_cp_rank(MatN::from_rows({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("random rank-1 instances verify and match the gcd formula") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int64> dd(1, 200);
    std::uniform_int_distribution<int64> dv(0, 20);
    std::uniform_int_distribution<std::size_t> dn(1, 4);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = dn(rng);
        VecN v(n);
        bool nonzero = false;
        for (auto& e : v) {
            e = dv(rng);
            nonzero |= e != 0;
        }
        if (!nonzero) v[0] = 1;
        int64 d = dd(rng);
        MatN m = scaled_outer(d, v);

        REQUIRE(is_rank1_dnn(m));
        Factorization f = factor_rank1(m);
        CHECK(verify(m, f));

        int64 g = 0;
        for (std::size_t k = 0; k < n; ++k) g = std::gcd(g, m.at(k, k));
        CHECK(static_cast<int>(f.size()) == min_square_count(g));

        // Every diagonal entry of m/g is a perfect square.
        for (std::size_t k = 0; k < n; ++k)
            CHECK(is_perfect_square(m.at(k, k) / g));
    }
}
