#pragma once

// Constructive algebraic transforms on small tuples of integers:
//
//  * the 1878 Realis composition identity,
//      (a^2+b^2+c^2)^2 (x^2+y^2+z^2) = X^2 + Y^2 + Z^2
//    with X,Y,Z linear in x,y,z;
//  * the mod-3 step built on it: multiply a square-sum by 9 while
//    preserving componentwise parity and forcing all outputs coprime to 3;
//  * its fixpoint form: rewrite a triple whose square-sum is a positive
//    multiple of 3 so that no component is divisible by 3, keeping the
//    square-sum and the parities;
//  * renormalization of a binary form value w = x^2 + m y^2 so that the
//    representing pair is not entirely divisible by 3 (m in {2,5,8});
//  * the even-pair split y^2 + z^2 = 2u^2 + 2v^2.

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "octoform/arith.hpp"

namespace octoform {

struct Triple {
    i64 x = 0, y = 0, z = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
    i128 square_sum() const {
        return static_cast<i128>(x) * x + static_cast<i128>(y) * y +
               static_cast<i128>(z) * z;
    }
};

// ((b^2+c^2-a^2)x - 2a(by+cz),
//  (a^2-b^2+c^2)y - 2b(ax+cz),
//  (a^2+b^2-c^2)z - 2c(ax+by));
// the square-sum of the result equals (a^2+b^2+c^2)^2 (x^2+y^2+z^2).
inline Triple realis_identity(i64 a, i64 b, i64 c, i64 x, i64 y, i64 z) {
    i64 a2 = checked_mul(a, a), b2 = checked_mul(b, b), c2 = checked_mul(c, c);
    Triple out;
    out.x = checked_sub(checked_mul(checked_sub(checked_add(b2, c2), a2), x),
                        checked_mul(2 * a, checked_add(checked_mul(b, y), checked_mul(c, z))));
    out.y = checked_sub(checked_mul(checked_add(checked_sub(a2, b2), c2), y),
                        checked_mul(2 * b, checked_add(checked_mul(a, x), checked_mul(c, z))));
    out.z = checked_sub(checked_mul(checked_sub(checked_add(a2, b2), c2), z),
                        checked_mul(2 * c, checked_add(checked_mul(a, x), checked_mul(b, y))));
    return out;
}

inline bool all_divisible_by_3(const Triple& t) {
    return t.x % 3 == 0 && t.y % 3 == 0 && t.z % 3 == 0;
}

inline bool none_divisible_by_3(const Triple& t) {
    return t.x % 3 != 0 && t.y % 3 != 0 && t.z % 3 != 0;
}

// One mod-3 step: given (x,y,z) not all divisible by 3, returns a triple
// with square-sum multiplied by exactly 9, componentwise parity preserved,
// and every component coprime to 3. Signs are flipped on the first single
// component (checking z, then y, then x) that makes x'+y'+z' nonzero mod 3;
// one flip always suffices.
inline Triple step_triple_mod3(const Triple& t) {
    if (all_divisible_by_3(t))
        throw std::invalid_argument("step_triple_mod3: all components divisible by 3");
    i64 xs = t.x, ys = t.y, zs = t.z;
    if (mod_floor(xs + ys + zs, 3) == 0) {
        if (mod_floor(zs, 3) != 0) zs = -zs;
        else if (mod_floor(ys, 3) != 0) ys = -ys;
        else xs = -xs;
    }
    Triple out;
    out.x = checked_sub(xs, checked_add(checked_mul(2, ys), checked_mul(2, zs)));
    out.y = checked_sub(ys, checked_add(checked_mul(2, xs), checked_mul(2, zs)));
    out.z = checked_sub(zs, checked_add(checked_mul(2, xs), checked_mul(2, ys)));
    return out;
}

// Rewrites a triple whose square-sum is a positive multiple of 3 into one
// with the same square-sum, the same componentwise parities, and no
// component divisible by 3. A triple already coprime to 3 passes through
// unchanged. Otherwise a square-sum divisible by 3 forces all components
// divisible by 3, so we strip the common 3-power and re-grow it with
// mod-3 steps.
inline Triple normalize_triple_mod3(const Triple& t) {
    i128 ss = t.square_sum();
    if (ss <= 0 || ss % 3 != 0)
        throw std::invalid_argument(
            "normalize_triple_mod3: square-sum must be a positive multiple of 3");
    if (none_divisible_by_3(t)) return t;
    Triple cur = t;
    int a = 0;
    while (all_divisible_by_3(cur)) {
        cur = {cur.x / 3, cur.y / 3, cur.z / 3};
        ++a;
    }
    for (int i = 0; i < a; ++i) cur = step_triple_mod3(cur);
    return cur;
}

// Given w = x^2 + m y^2 > 0 with m in {2,5,8}, returns (u,v) with
// u^2 + m v^2 = w and u,v not both divisible by 3; the result is the
// lexicographically smallest valid pair of nonnegative integers. The seed
// only witnesses that w is representable; a missing result means the
// implementation itself is broken, not the input.
inline std::pair<i64, i64> renormalize_binary_mod3(i64 w, int m,
                                                   std::pair<i64, i64> seed) {
    if (m != 2 && m != 5 && m != 8)
        throw std::invalid_argument("renormalize_binary_mod3: m must be 2, 5 or 8");
    if (w <= 0) throw std::invalid_argument("renormalize_binary_mod3: w must be positive");
    i128 check = static_cast<i128>(seed.first) * seed.first +
                 static_cast<i128>(m) * seed.second * seed.second;
    if (check != static_cast<i128>(w))
        throw std::invalid_argument("renormalize_binary_mod3: seed does not represent w");
    for (i64 u = 0; u * u <= w; ++u) {
        i64 rem = w - u * u;
        if (rem % m != 0) continue;
        i64 q = rem / m;
        i64 v = isqrt(q);
        if (v * v != q) continue;
        if (u % 3 != 0 || v % 3 != 0) return {u, v};
    }
    throw std::logic_error(
        "renormalize_binary_mod3: no admissible representation found (internal bug)");
}

// y^2 + z^2 = 2u^2 + 2v^2 with u = (y+z)/2, v = (y-z)/2; needs y = z (mod 2).
inline std::pair<i64, i64> split_even_pair(i64 y, i64 z) {
    if (mod_floor(y, 2) != mod_floor(z, 2))
        throw std::invalid_argument("split_even_pair: y and z must have equal parity");
    return {(y + z) / 2, (y - z) / 2};
}

} // namespace octoform
