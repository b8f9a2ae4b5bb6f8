#include "cpfact/oracle.hpp"

#include <algorithm>
#include <limits>

#include "cpfact/cp2.hpp"
#include "cpfact/rank1.hpp"

namespace cpfact {

namespace {

struct budget_exhausted {};

constexpr int64 kUnbounded = std::numeric_limits<int64>::max();

class Searcher {
  public:
    Searcher(const SearchOptions& opts) : opts_(opts) {}

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<VecN>& columns() const { return stack_; }

    bool search(const Mat2& m, int depth) {
        stack_.clear();
        return dfs(m, depth, kUnbounded, kUnbounded);
    }

  private:
    bool dfs(const Mat2& rem, int depth_left, int64 last_x, int64 last_y) {
        if (++nodes_ > opts_.node_budget) throw budget_exhausted{};
        if (rem.is_zero()) return true;
        if (depth_left == 0) return false;

        int64 xcap = std::min(last_x, isqrt(rem.a));
        int64 ycap = isqrt(rem.c);
        if (opts_.coverage_prune) {
            // Every later column has x <= xcap, so at most depth_left * xcap^2
            // of the remaining a (and xcap*ycap of b) can still be covered.
            if (rem.a > 0 && checked_mul(depth_left, xcap * xcap) < rem.a)
                return false;
            if (rem.b > 0 && checked_mul(depth_left, xcap * ycap) < rem.b)
                return false;
        }

        for (int64 x = xcap; x >= 0; --x) {
            int64 ytop = (x == last_x) ? std::min(last_y, ycap) : ycap;
            int64 ylo = 0;
            if (opts_.dnn_prune) {
                // PSD of the remainder is a quadratic constraint in y:
                //   a*y^2 - 2*b*x*y + (b^2 - c*(a - x^2)) <= 0,
                // with discriminant (a - x^2) * det(rem). The integer root
                // bounds are exact, so only feasible y are visited.
                if (rem.a == 0) {
                    if (rem.b != 0) break;
                } else {
                    int64 d = checked_mul(rem.a - x * x, rem.det());
                    int64 s = isqrt(d);
                    int64 bx = checked_mul(rem.b, x);
                    ytop = std::min(ytop, (bx + s) / rem.a);
                    if (bx > s) ylo = (bx - s + rem.a - 1) / rem.a;
                }
            }
            for (int64 y = ytop; y >= ylo; --y) {
                if (x == 0 && y == 0) continue;
                if (checked_mul(x, y) > rem.b) continue;
                Mat2 next{rem.a - x * x, rem.b - x * y, rem.c - y * y};
                if (opts_.dnn_prune && next.det() < 0) continue;
                stack_.push_back({x, y});
                if (dfs(next, depth_left - 1, x, y)) return true;
                stack_.pop_back();
            }
        }
        return false;
    }

    const SearchOptions& opts_;
    std::uint64_t nodes_ = 0;
    std::vector<VecN> stack_;
};

}  // namespace

RankReport exact_cp_rank(const Mat2& m, const SearchOptions& opts) {
    require_dnn(m);
    if (m.a > opts.diag_cap || m.c > opts.diag_cap)
        throw std::invalid_argument("diagonal exceeds the search cap of " +
                                    std::to_string(opts.diag_cap));

    if (m.is_zero())
        return RankReport{0, Factorization{{}, "oracle"}, RankMethod::Exact, 0};

    // The search runs on m itself. The unimodular congruence only transports
    // factorizations one way (its inverse is nonnegative, it is not), so
    // reducing first would be unsound for exact ranks; it is only used inside
    // factor() to obtain the upper bound and its certificate.
    Factorization upper = factor(m);
    int ub = static_cast<int>(upper.size());
    int lb = (m.det() == 0) ? 1 : 2;

    Searcher searcher(opts);
    for (int k = lb; k < ub; ++k) {
        bool found;
        try {
            found = searcher.search(m, k);
        } catch (const budget_exhausted&) {
            // Depths below k are exhausted, so k is a sound lower bound.
            throw inconclusive_error(k, ub, searcher.nodes());
        }
        if (found) {
            Factorization cert{searcher.columns(), "oracle"};
            RankReport report{static_cast<int>(cert.size()), std::move(cert),
                              RankMethod::Exact, searcher.nodes()};
            if (!verify(m, report.certificate))
                throw std::logic_error("oracle certificate failed verification");
            return report;
        }
    }

    // Nothing below the template bound, so the template certificate is optimal.
    Factorization cert = std::move(upper);
    cert.method = "oracle";
    if (!verify(m, cert))
        throw std::logic_error("oracle certificate failed verification");
    return RankReport{ub, std::move(cert), RankMethod::Exact, searcher.nodes()};
}

bool exact_matches_formula_rank1(int64 d, const VecN& v, const SearchOptions& opts) {
    if (v.size() != 2)
        throw std::invalid_argument("rank-1 differential check expects length-2 v");
    Mat2 m{checked_mul(d, checked_mul(v[0], v[0])),
           checked_mul(d, checked_mul(v[0], v[1])),
           checked_mul(d, checked_mul(v[1], v[1]))};
    MatN mn = MatN::from_rows({{m.a, m.b}, {m.b, m.c}});
    return exact_cp_rank(m, opts).rank == rank1_cp_rank(mn);
}

}  // namespace cpfact
