#include "cpfact/squares.hpp"

#include <stdexcept>

namespace cpfact {

namespace {

void require_nonneg(int64 x) {
    if (x < 0) throw std::invalid_argument("expected a nonnegative integer");
}

// Largest t <= max_part with x - t^2 a perfect square, or -1.
int64 find_two_square_part(int64 x, int64 max_part) {
    for (int64 t = std::min(max_part, isqrt(x)); t >= 1; --t) {
        if (is_perfect_square(x - t * t)) return t;
    }
    return -1;
}

// Appends a minimal representation of x using exactly `count` positive parts,
// each <= max_part, largest-first. Returns false if none exists under the cap.
bool decompose_rec(int64 x, int count, int64 max_part, std::vector<int64>& out) {
    if (count == 0) return x == 0;
    if (count == 1) {
        int64 s = isqrt(x);
        if (s >= 1 && s <= max_part && s * s == x) {
            out.push_back(s);
            return true;
        }
        return false;
    }
    if (count == 2) {
        if (!is_sum_of_two_squares(x)) return false;
        int64 t = find_two_square_part(x, max_part);
        if (t < 0) return false;
        out.push_back(t);
        out.push_back(isqrt(x - t * t));
        return true;
    }
    for (int64 s = std::min(max_part, isqrt(x)); s >= 1; --s) {
        if (s * s * count < x) break;  // even `count` copies of s fall short
        out.push_back(s);
        if (decompose_rec(x - s * s, count - 1, s, out)) return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

bool is_form_4r8k7(int64 x) {
    require_nonneg(x);
    if (x == 0) return false;
    while (x % 4 == 0) x /= 4;
    return x % 8 == 7;
}

bool is_sum_of_two_squares(int64 x) {
    require_nonneg(x);
    while (x % 2 == 0) x /= 2;
    for (int64 p = 3; p * p <= x; p += 2) {
        if (x % p != 0) continue;
        int e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        if (p % 4 == 3 && e % 2 != 0) return false;
    }
    return x % 4 != 3;
}

int min_square_count(int64 x) {
    require_nonneg(x);
    if (x == 0) return 0;
    if (is_perfect_square(x)) return 1;
    if (is_sum_of_two_squares(x)) return 2;
    if (is_form_4r8k7(x)) return 4;
    return 3;
}

SquareDecomp decompose(int64 x) {
    int count = min_square_count(x);
    SquareDecomp d{x, {}, true};
    d.parts.reserve(count);
    bool ok = decompose_rec(x, count, x == 0 ? 0 : isqrt(x), d.parts);
    if (!ok) throw std::logic_error("decompose: no representation found");
    return d;
}

bool neighbor_excluded(int64 x) {
    require_nonneg(x);
    if (!is_form_4r8k7(x)) return true;
    for (int64 off : {-6, -2, 2, 6}) {
        int64 y = x + off;
        if (y >= 0 && is_form_4r8k7(y)) return false;
    }
    return true;
}

}  // namespace cpfact
