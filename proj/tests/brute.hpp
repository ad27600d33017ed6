#pragma once

// Test-side brute-force oracles, deliberately written as direct nested
// loops so they share no code path with the library implementations they
// check.

#include <vector>

#include "octoform/arith.hpp"

namespace octoform::brute {

// representable[n] = does c0 x^2 + c1 y^2 + c2 z^2 = n have a solution,
// for all n <= bound at once.
inline std::vector<char> mark_ternary(i64 c0, i64 c1, i64 c2, i64 bound) {
    std::vector<char> ok(bound + 1, 0);
    for (i64 x = 0; c0 * x * x <= bound; ++x) {
        i64 a = c0 * x * x;
        for (i64 y = 0; a + c1 * y * y <= bound; ++y) {
            i64 b = a + c1 * y * y;
            for (i64 z = 0; b + c2 * z * z <= bound; ++z) ok[b + c2 * z * z] = 1;
        }
    }
    return ok;
}

// representable by four nonzero squares, bulk.
inline std::vector<char> mark_four_nonzero_squares(i64 bound) {
    std::vector<char> ok(bound + 1, 0);
    for (i64 w = 1; 4 * w * w <= bound; ++w)
        for (i64 x = w; w * w + 3 * x * x <= bound; ++x)
            for (i64 y = x; w * w + x * x + 2 * y * y <= bound; ++y)
                for (i64 z = y; w * w + x * x + y * y + z * z <= bound; ++z)
                    ok[w * w + x * x + y * y + z * z] = 1;
    return ok;
}

// ordered signed count of x^2+y^2+2z^2 = n (Cooper-Lam reference).
inline i64 count_112(i64 n) {
    i64 cnt = 0;
    for (i64 x = 0; x * x <= n; ++x) {
        i64 mx = x == 0 ? 1 : 2;
        for (i64 y = 0; x * x + y * y <= n; ++y) {
            i64 my = y == 0 ? 1 : 2;
            i64 rem = n - x * x - y * y;
            if (rem % 2 != 0) continue;
            i64 q = rem / 2;
            i64 z = isqrt(q);
            if (z * z != q) continue;
            cnt += mx * my * (z == 0 ? 1 : 2);
        }
    }
    return cnt;
}

// number of multisets {a,b,c,d} of nonnegative integers, none divisible by
// 3, with a^2+b^2+c^2+d^2 = m.
inline i64 count_four_square_multisets_coprime3(i64 m) {
    i64 cnt = 0;
    for (i64 a = 0; 4 * a * a <= m; ++a) {
        if (a % 3 == 0) continue; // 0 counts as divisible by 3
        for (i64 b = a; a * a + 3 * b * b <= m; ++b) {
            if (b % 3 == 0) continue;
            for (i64 c = b; a * a + b * b + 2 * c * c <= m; ++c) {
                if (c % 3 == 0) continue;
                i64 rem = m - a * a - b * b - c * c;
                if (rem < c * c) break;
                i64 d = isqrt(rem);
                if (d * d == rem && d >= c && d % 3 != 0) ++cnt;
            }
        }
    }
    return cnt;
}

} // namespace octoform::brute
