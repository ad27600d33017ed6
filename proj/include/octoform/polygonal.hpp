#pragma once

// Polygonal-number formulas, inversion and ordered enumeration.
//
// p_m(x) = ((m-2)x^2 - (m-4)x) / 2, defined for every integer x. The
// nonnegative branch (x >= 0) gives the classical m-gonal numbers, the
// nonpositive branch the second m-gonal numbers, and the union over all of
// Z the generalized m-gonal numbers. For m = 8 this is x(3x-2):
// 0, 1, 5, 8, 16, 21, 33, 40, 56, 65, ...

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "octoform/arith.hpp"

namespace octoform {

enum class Domain { AllIntegers, Naturals, SecondNaturals };

struct PolygonalFamily {
    i64 order = 8;
    Domain domain = Domain::AllIntegers;
};

inline void require_order(i64 m) {
    if (m < 3) throw std::invalid_argument("polygonal order must be >= 3");
}

// p_m(x), exact; overflow reported, never wrapped.
inline i64 polygonal_value(i64 m, i64 x) {
    require_order(m);
    i128 v = (static_cast<i128>(m - 2) * x * x - static_cast<i128>(m - 4) * x) / 2;
    return narrow_i128(v);
}

inline bool domain_admits(Domain d, i64 x) {
    switch (d) {
        case Domain::AllIntegers: return true;
        case Domain::Naturals: return x >= 0;
        case Domain::SecondNaturals: return x <= 0;
    }
    return false;
}

// Some x in the domain with p_m(x) = n, or nothing. When both roots
// qualify the larger one wins (so under AllIntegers the positive root is
// preferred).
inline std::optional<i64> invert_polygonal(i64 m, i64 n, Domain domain) {
    require_order(m);
    if (n < 0) throw std::invalid_argument("invert_polygonal: n must be >= 0");
    // (m-2)x^2 - (m-4)x - 2n = 0
    i128 disc = static_cast<i128>(m - 4) * (m - 4) + static_cast<i128>(8) * (m - 2) * n;
    i64 d64 = narrow_i128(disc);
    i64 root = isqrt(d64);
    if (static_cast<i128>(root) * root != disc) return std::nullopt;
    const i64 den = 2 * (m - 2);
    for (i64 num : {(m - 4) + root, (m - 4) - root}) {
        if (num % den != 0) continue;
        i64 x = num / den;
        if (domain_admits(domain, x)) return x;
    }
    return std::nullopt;
}

// { p_m(x) : x in domain, p_m(x) <= bound }, ascending, deduplicated.
// Walks x = 0, 1, -1, 2, -2, ... and stops once both branches exceed the
// bound (each branch is nondecreasing in |x|).
inline std::vector<i64> enumerate_values(const PolygonalFamily& family, i64 bound) {
    require_order(family.order);
    if (bound < 0) throw std::invalid_argument("enumerate_values: bound must be >= 0");
    const bool pos = family.domain != Domain::SecondNaturals;
    const bool neg = family.domain != Domain::Naturals;
    std::vector<i64> vals;
    for (i64 k = 0;; ++k) {
        i64 a = polygonal_value(family.order, k);
        i64 b = polygonal_value(family.order, -k);
        if (k > 0 && a > bound && b > bound) break;
        if (pos && a <= bound) vals.push_back(a);
        if (neg && b <= bound) vals.push_back(b);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

inline std::vector<i64> enumerate_values(i64 order, Domain domain, i64 bound) {
    return enumerate_values(PolygonalFamily{order, domain}, bound);
}

} // namespace octoform
