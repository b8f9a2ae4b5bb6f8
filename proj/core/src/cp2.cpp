#include "cpfact/cp2.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cpfact {

std::pair<Mat2, TransformLog> reduce(const Mat2& m) {
    require_dnn(m);
    Mat2 r = m;
    TransformLog log;
    while (r.b > std::min(r.a, r.c)) {
        // det >= 0 and b > min > 0 force both diagonal entries positive here.
        if (r.c <= r.a) {
            int64 alpha = r.b / r.c;
            int64 a0 = checked_add(r.a, checked_add(-checked_mul(2 * alpha, r.b),
                                                    checked_mul(alpha * alpha, r.c)));
            r = Mat2{a0, r.b - alpha * r.c, r.c};
            log.steps.push_back({Side::Upper, alpha});
        } else {
            int64 alpha = r.b / r.a;
            int64 c0 = checked_add(r.c, checked_add(-checked_mul(2 * alpha, r.b),
                                                    checked_mul(alpha * alpha, r.a)));
            r = Mat2{r.a, r.b - alpha * r.a, c0};
            log.steps.push_back({Side::Lower, alpha});
        }
        if (!is_dnn(r)) throw std::logic_error("reduction left the DNN cone");
    }
    return {r, std::move(log)};
}

Factorization replay(const TransformLog& log, Factorization f) {
    for (auto it = log.steps.rbegin(); it != log.steps.rend(); ++it) {
        for (VecN& col : f.columns) {
            if (it->side == Side::Upper)
                col[0] = checked_add(col[0], checked_mul(it->alpha, col[1]));
            else
                col[1] = checked_add(col[1], checked_mul(it->alpha, col[0]));
        }
    }
    return f;
}

int64 template_d1(const Mat2& m, const Template& t) {
    return m.a - t.beta - t.x * t.x;
}

int64 template_d2(const Mat2& m, const Template& t) {
    return m.c - t.beta - t.y * t.y;
}

namespace {

void require_reduced(const Mat2& m) {
    require_dnn(m);
    if (m.b > std::min(m.a, m.c))
        throw std::invalid_argument("matrix is not reduced: b > min(a, c)");
}

int template_cost(const Mat2& m, const Template& t) {
    return min_square_count(template_d1(m, t)) + min_square_count(template_d2(m, t)) +
           min_square_count(t.beta) + ((t.x != 0 || t.y != 0) ? 1 : 0);
}

std::string template_tag(const Template& t) {
    if (t.x == 0 && t.y == 0) return "base";
    // ':' separators keep the tag a single CSV field.
    return "tpl(" + std::to_string(t.x) + ":" + std::to_string(t.y) + ":" +
           std::to_string(t.beta) + ")";
}

}  // namespace

Factorization realize_template(const Mat2& m, const Template& t) {
    require_reduced(m);
    int64 d1 = template_d1(m, t);
    int64 d2 = template_d2(m, t);
    if (t.beta < 0 || d1 < 0 || d2 < 0 ||
        checked_add(t.beta, checked_mul(t.x, t.y)) != m.b)
        throw std::invalid_argument("infeasible template");

    Factorization f;
    f.method = template_tag(t);
    for (int64 s : decompose(t.beta).parts) f.columns.push_back({s, s});
    if (t.x != 0 || t.y != 0) f.columns.push_back({t.x, t.y});
    for (int64 s : decompose(d1).parts) f.columns.push_back({s, 0});
    for (int64 s : decompose(d2).parts) f.columns.push_back({0, s});
    if (!verify(m, f))
        throw std::logic_error("template failed reconstruction");
    return f;
}

Factorization base_template(const Mat2& m) {
    require_reduced(m);
    return realize_template(m, Template{0, 0, m.b, 0});
}

std::vector<Template> theorem_templates(const Mat2& m) {
    require_reduced(m);
    std::vector<Template> out;
    int64 b = m.b, ab = m.a - m.b, cb = m.c - m.b;
    if (!is_form_4r8k7(b) || !is_form_4r8k7(ab) || !is_form_4r8k7(cb))
        return out;
    // All three are >= 7 here, so beta and both diagonal leftovers stay >= 0.
    if (ab % 8 != 7) out.push_back({3, 2, b - 6, 0});
    if (cb % 8 != 7) out.push_back({2, 3, b - 6, 0});
    if (ab % 8 == 7 && cb % 8 == 7) out.push_back({1, 2, b - 2, 0});
    for (Template& t : out) t.columns_bound = template_cost(m, t);
    return out;
}

Factorization factor(const Mat2& m) {
    require_dnn(m);
    auto [r, log] = reduce(m);

    // Candidate templates: the base split (0, 0, b), every guaranteed
    // theorem template, and the exhaustive micro-search over small mixed
    // columns. The search range contains the other two whenever feasible.
    bool found = false;
    Template best;
    int best_cost = 0;
    auto consider = [&](const Template& t) {
        int cost = template_cost(r, t);
        auto key = std::make_tuple(cost, t.x, t.y, t.beta);
        if (!found || key < std::make_tuple(best_cost, best.x, best.y, best.beta)) {
            found = true;
            best = t;
            best_cost = cost;
        }
    };

    int64 xmax = std::min<int64>(6, isqrt(r.a));
    int64 ymax = std::min<int64>(6, isqrt(r.c));
    for (int64 x = 0; x <= xmax; ++x) {
        for (int64 y = 0; y <= ymax; ++y) {
            if (x * y > r.b) continue;
            Template t{x, y, r.b - x * y, 0};
            if (template_d1(r, t) < 0 || template_d2(r, t) < 0) continue;
            consider(t);
        }
    }
    for (const Template& t : theorem_templates(r)) consider(t);

    Factorization f = replay(log, realize_template(r, best));
    f.method = template_tag(best);
    if (f.size() > 11) throw std::logic_error("factor exceeded the 11-column bound");
    if (!verify(m, f)) throw std::logic_error("factor failed verification");
    return f;
}

int cp_rank_upper(const Mat2& m) {
    return static_cast<int>(factor(m).size());
}

}  // namespace cpfact
