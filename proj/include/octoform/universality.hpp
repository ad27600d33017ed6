#pragma once

// Sieve-based representability for weighted sums of generalized octagonal
// numbers, universality verdicts up to a bound, the necessity scan over
// coefficient quadruples, and the dual-route equivalence
//   n in Z(1,b,c,d)  <=>  3n+b+c+d+1 = w^2+b x^2+c y^2+d z^2 with 3 !| wxyz.

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "octoform/arith.hpp"
#include "octoform/bitset.hpp"
#include "octoform/forms.hpp"
#include "octoform/parallel.hpp"
#include "octoform/polygonal.hpp"
#include "octoform/report.hpp"

namespace octoform {

struct QuaternarySum {
    std::vector<i64> coeffs;     // positive weights, usually 3 or 4 of them
    std::vector<Domain> domains; // one per slot; empty means all AllIntegers
    i64 order = 8;

    QuaternarySum(std::vector<i64> c, std::vector<Domain> d = {}, i64 m = 8)
        : coeffs(std::move(c)), domains(std::move(d)), order(m) {
        if (coeffs.empty()) throw std::invalid_argument("QuaternarySum: no coefficients");
        for (i64 a : coeffs)
            if (a < 1) throw std::invalid_argument("QuaternarySum: coefficients must be >= 1");
        if (!domains.empty() && domains.size() != coeffs.size())
            throw std::invalid_argument("QuaternarySum: domain count mismatch");
    }

    Domain domain(size_t i) const {
        return domains.empty() ? Domain::AllIntegers : domains[i];
    }

    std::string describe() const {
        std::ostringstream os;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) os << '+';
            if (coeffs[i] != 1) os << coeffs[i] << '*';
            os << 'p' << order;
            if (domain(i) == Domain::Naturals) os << "(N)";
            if (domain(i) == Domain::SecondNaturals) os << "(N2)";
        }
        return os.str();
    }
};

// Bit n set iff n is a value of the sum, exact on [0, bound].
inline Bitset representable_sieve(const QuaternarySum& sum, i64 bound) {
    if (bound < 0) throw std::invalid_argument("representable_sieve: bound must be >= 0");
    std::vector<std::vector<i64>> lists;
    lists.reserve(sum.coeffs.size());
    for (size_t i = 0; i < sum.coeffs.size(); ++i) {
        i64 c = sum.coeffs[i];
        auto vals = enumerate_values(sum.order, sum.domain(i), bound / c);
        for (i64& v : vals) v *= c;
        lists.push_back(std::move(vals));
    }
    return sum_sieve(lists, bound);
}

inline std::vector<i64> exceptional_set(const QuaternarySum& sum, i64 bound) {
    return representable_sieve(sum, bound).zeros();
}

inline ScanReport check_universal(const QuaternarySum& sum, i64 bound) {
    StopWatch watch;
    ScanReport rep;
    rep.task = "universal";
    rep.params["sum"] = sum.describe();
    rep.bound = bound;
    rep.verified_upto = bound;
    rep.set_exceptions(exceptional_set(sum, bound));
    rep.elapsed_ms = watch.elapsed_ms();
    return rep;
}

// Every 1 <= a <= b <= c <= d <= max_d whose sum a p8+b p8+c p8+d p8 over Z
// has no counterexample <= bound. All candidates are tested uniformly with
// bound-limited sieves; the known elimination witnesses all lie below 60,
// hence the bound floor.
inline std::vector<std::array<i64, 4>> necessity_scan(i64 max_d, i64 bound,
                                                      int threads = 1) {
    if (max_d < 1) throw std::invalid_argument("necessity_scan: max_d must be >= 1");
    if (bound < 60) throw std::invalid_argument("necessity_scan: bound must be >= 60");
    std::vector<std::array<i64, 4>> candidates;
    for (i64 a = 1; a <= max_d; ++a)
        for (i64 b = a; b <= max_d; ++b)
            for (i64 c = b; c <= max_d; ++c)
                for (i64 d = c; d <= max_d; ++d) candidates.push_back({a, b, c, d});
    std::vector<char> keep(candidates.size(), 0);
    parallel_chunks(0, static_cast<i64>(candidates.size()), threads,
                    [&](size_t, i64 lo, i64 hi) {
                        for (i64 i = lo; i < hi; ++i) {
                            const auto& q = candidates[i];
                            QuaternarySum sum({q[0], q[1], q[2], q[3]});
                            keep[i] = exceptional_set(sum, bound).empty() ? 1 : 0;
                        }
                    });
    std::vector<std::array<i64, 4>> survivors;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) survivors.push_back(candidates[i]);
    return survivors;
}

// Both routes of the universality criterion for one n: membership in
// Z(1,b,c,d) by direct enumeration over octagonal values, and solvability
// of w^2 + b x^2 + c y^2 + d z^2 = 3n+b+c+d+1 with all variables coprime
// to 3. The two must agree.
inline std::pair<bool, bool> equivalence_43(const std::array<i64, 3>& bcd, i64 n) {
    if (n < 0) throw std::invalid_argument("equivalence_43: n must be >= 0");
    const auto [b, c, d] = bcd;
    const std::vector<i64> V = enumerate_values(8, Domain::AllIntegers, n);
    bool lhs = false;
    for (i64 vw : V) {
        if (vw > n) break;
        for (i64 vx : V) {
            i64 r2 = n - vw - b * vx;
            if (r2 < 0) break;
            for (i64 vy : V) {
                i64 r3 = r2 - c * vy;
                if (r3 < 0) break;
                if (r3 % d == 0 &&
                    std::binary_search(V.begin(), V.end(), r3 / d)) {
                    lhs = true;
                    break;
                }
            }
            if (lhs) break;
        }
        if (lhs) break;
    }
    const i64 target = 3 * n + b + c + d + 1;
    bool rhs = exists_constrained(DiagonalForm({1, b, c, d}), target,
                                  VariableConstraints::coprime_to_3_all(4));
    return {lhs, rhs};
}

namespace detail {

// n = p8(u)+p8(v)+3p8(w) over Z iff 3n+5 = x^2+y^2+3z^2 with 3 !| z.
inline bool ternary_113_alternative(i64 n) {
    const i64 t = 3 * n + 5;
    for (i64 z = 1; 3 * z * z <= t; ++z) {
        if (z % 3 == 0) continue;
        i64 rem = t - 3 * z * z;
        for (i64 x = 0; 2 * x * x <= rem; ++x) {
            if (is_square(rem - x * x)) return true;
        }
    }
    return false;
}

} // namespace detail

// Exceptional set of a p8 + b p8 + c p8 over Z up to bound. For (1,1,3) the
// result is cross-checked on [0, min(bound, 2000)] against the ternary-form
// criterion above; disagreement would mean a broken sieve.
inline ScanReport ternary_scan(const std::array<i64, 3>& coeffs, i64 bound) {
    StopWatch watch;
    QuaternarySum sum({coeffs[0], coeffs[1], coeffs[2]});
    Bitset bits = representable_sieve(sum, bound);
    if (coeffs == std::array<i64, 3>{1, 1, 3}) {
        const i64 upto = std::min<i64>(bound, 2000);
        for (i64 n = 0; n <= upto; ++n) {
            if (bits.test(n) != detail::ternary_113_alternative(n))
                throw std::logic_error(
                    "ternary_scan: sieve disagrees with the x^2+y^2+3z^2 route at n=" +
                    std::to_string(n));
        }
    }
    ScanReport rep;
    rep.task = "ternary-scan";
    rep.params["sum"] = sum.describe();
    rep.bound = bound;
    rep.verified_upto = bound;
    rep.set_exceptions(bits.zeros());
    rep.elapsed_ms = watch.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// coefficient catalogs
// ---------------------------------------------------------------------------

// The 33 (b,c,d) with p8 + b p8 + c p8 + d p8 known universal over Z.
inline const std::vector<std::array<i64, 3>>& known_universal_bcd() {
    static const std::vector<std::array<i64, 3>> table = {
        {1, 2, 2}, {1, 2, 8},  {2, 2, 4}, {2, 4, 8}, {2, 2, 2}, {2, 4, 4},
        {1, 1, 2}, {1, 2, 3},  {1, 2, 5}, {1, 2, 7}, {1, 2, 9}, {1, 2, 11},
        {1, 2, 13}, {1, 2, 4}, {2, 3, 4}, {2, 4, 5}, {2, 4, 7}, {2, 4, 9},
        {2, 4, 11}, {2, 4, 13}, {1, 1, 3}, {2, 2, 3}, {2, 2, 6}, {2, 3, 8},
        {1, 2, 6}, {1, 2, 10}, {1, 2, 12}, {2, 4, 6}, {2, 4, 10}, {2, 4, 12},
        {2, 2, 5}, {2, 3, 5},  {1, 3, 5}};
    return table;
}

// The 40 (b,c,d) that survive the necessity conditions (a is forced to 1);
// the five in conjectured_universal_bcd() plus (1,1,1), (1,1,4) and the 33
// above make up exactly this list.
inline const std::vector<std::array<i64, 3>>& admissible_bcd() {
    static const std::vector<std::array<i64, 3>> table = {
        {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 2, 2}, {1, 2, 3},
        {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 2, 7}, {1, 2, 8}, {1, 2, 9},
        {1, 2, 10}, {1, 2, 11}, {1, 2, 12}, {1, 2, 13}, {1, 3, 3}, {1, 3, 5},
        {1, 3, 6}, {2, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {2, 2, 6},
        {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 3, 7}, {2, 3, 8}, {2, 3, 9},
        {2, 4, 4}, {2, 4, 5}, {2, 4, 6}, {2, 4, 7}, {2, 4, 8}, {2, 4, 9},
        {2, 4, 10}, {2, 4, 11}, {2, 4, 12}, {2, 4, 13}};
    return table;
}

// The five remaining (b,c,d) conjectured universal over Z.
inline const std::vector<std::array<i64, 3>>& conjectured_universal_bcd() {
    static const std::vector<std::array<i64, 3>> table = {
        {1, 3, 3}, {1, 3, 6}, {2, 3, 6}, {2, 3, 7}, {2, 3, 9}};
    return table;
}

// The five (b,c,d) conjectured to represent every n with the first slot
// over Z and the remaining three over N.
inline const std::vector<std::array<i64, 3>>& mixed_domain_bcd() {
    static const std::vector<std::array<i64, 3>> table = {
        {1, 1, 2}, {1, 2, 3}, {1, 2, 5}, {1, 2, 11}, {2, 3, 4}};
    return table;
}

} // namespace octoform
