#include "cpfact/rank1.hpp"

#include <numeric>
#include <stdexcept>

namespace cpfact {

namespace {

void require_rank1(const MatN& m) {
    if (!is_rank1_dnn(m))
        throw std::invalid_argument("matrix is not rank-1 doubly nonnegative");
}

}  // namespace

Rank1Cert rank1_certificate(const MatN& m) {
    require_rank1(m);
    if (m.is_zero())
        throw std::invalid_argument("zero matrix has no rank-1 certificate");
    std::size_t n = m.order();
    int64 d = 0;
    for (std::size_t i = 0; i < n; ++i) d = std::gcd(d, m.at(i, i));

    Rank1Cert cert;
    cert.d = d;
    cert.base.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int64 q = m.at(i, i) / d;
        int64 s = isqrt(q);
        if (s * s != q)
            throw std::logic_error("diagonal of A/d is not a perfect square");
        cert.base[i] = s;
    }
    cert.squares = decompose(d);
    return cert;
}

Factorization factor_rank1(const MatN& m) {
    require_rank1(m);
    Factorization f;
    f.method = "rank1";
    if (m.is_zero()) return f;

    Rank1Cert cert = rank1_certificate(m);
    for (int64 s : cert.squares.parts) {
        VecN col(cert.base.size());
        for (std::size_t i = 0; i < col.size(); ++i)
            col[i] = checked_mul(s, cert.base[i]);
        f.columns.push_back(std::move(col));
    }
    if (!verify(m, f))
        throw std::logic_error("rank-1 factorization failed verification");
    return f;
}

int rank1_cp_rank(const MatN& m) {
    require_rank1(m);
    if (m.is_zero()) return 0;
    return static_cast<int>(factor_rank1(m).size());
}

}  // namespace cpfact
