#pragma once

// Constructive decomposition of any positive integer into four generalized
// octagonal numbers with an odd member, plus exact counting of unordered
// representations and the uniqueness scans.
//
// The decomposition works through 3n+4: n = p8(w)+p8(x)+p8(y)+p8(z) iff
// 3n+4 = (3w-1)^2 + (3x-1)^2 + (3y-1)^2 + (3z-1)^2, and an even square root
// on the right corresponds to an odd argument (hence odd value) on the
// left. So it suffices to write 3n+4 as a sum of four squares, none
// divisible by 3, at least one even - which is exactly what the four-square
// search plus the mod-3 normalization of identities.hpp deliver.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "octoform/arith.hpp"
#include "octoform/identities.hpp"
#include "octoform/parallel.hpp"
#include "octoform/polygonal.hpp"

namespace octoform {

struct DecompositionWitness {
    std::array<i64, 4> indices{}; // arguments w,x,y,z, sorted by value
    std::array<i64, 4> values{};  // p8 of each index, ascending
    i64 target = 0;

    // O(1) post-check of every invariant the witness promises.
    bool valid() const {
        i64 sum = 0;
        bool odd_value = false, odd_index = false;
        for (int i = 0; i < 4; ++i) {
            if (polygonal_value(8, indices[i]) != values[i]) return false;
            if (values[i] < 0) return false;
            sum += values[i];
            odd_value = odd_value || (values[i] % 2 != 0);
            odd_index = odd_index || (mod_floor(indices[i], 2) == 1);
        }
        return sum == target && odd_value && odd_index;
    }
};

namespace detail {

// First quadruple w >= x >= y >= z >= 0 of squares summing to M, scanned
// with the largest square first, that has at least `min_nonzero` nonzero
// members and (if require_even) an even member. Returns false if the scan
// found nothing but saw an all-odd candidate; that case is reported via
// saw_all_odd so the caller can descend to M/4.
inline bool four_square_scan(i64 M, int min_nonzero, bool require_even,
                             int scan_cap, std::array<i64, 4>& out,
                             bool& saw_all_odd) {
    saw_all_odd = false;
    int scanned = 0;
    for (i64 w = isqrt(M); w >= 0 && 4 * w * w >= M; --w) {
        i64 rem = M - w * w;
        for (i64 x = std::min(w, isqrt(rem)); x >= 0 && 3 * x * x >= rem; --x) {
            i64 rem2 = rem - x * x;
            for (i64 y = std::min(x, isqrt(rem2)); y >= 0 && 2 * y * y >= rem2; --y) {
                i64 z2 = rem2 - y * y;
                i64 z = isqrt(z2);
                if (z * z != z2) continue;
                std::array<i64, 4> q{w, x, y, z};
                int nz = 0;
                bool has_even = false, all_odd = true;
                for (i64 v : q) {
                    if (v != 0) ++nz;
                    if (v % 2 == 0) {
                        has_even = true;
                        all_odd = false;
                    }
                }
                if (nz < min_nonzero) continue;
                if (!require_even || has_even) {
                    out = q;
                    return true;
                }
                if (all_odd) saw_all_odd = true;
                if (++scanned >= scan_cap && saw_all_odd) return false;
            }
        }
    }
    return false;
}

// Sum of four squares of M with at least two nonzero members and, for
// M > 4, at least one even member. Mirrors the classical argument: when
// only all-odd representations turn up, M = 4 mod 8, so the representation
// of M/4 is doubled (making every member even).
inline std::array<i64, 4> four_squares_two_nonzero(i64 M) {
    if (M == 2) return {1, 1, 0, 0};
    if (M == 3) return {1, 1, 1, 0};
    if (M == 4) return {1, 1, 1, 1};
    if (M < 2) throw std::invalid_argument("four_squares_two_nonzero: M must be >= 2");
    std::array<i64, 4> q{};
    bool saw_all_odd = false;
    if (four_square_scan(M, 2, true, 64, q, saw_all_odd)) return q;
    if (!saw_all_odd || M % 8 != 4)
        throw std::logic_error("four_squares_two_nonzero: search failed (internal bug)");
    auto sub = four_squares_two_nonzero(M / 4);
    for (i64& v : sub) v *= 2;
    return sub;
}

// The argument t with (3t-1)^2 = u^2, for u coprime to 3; exactly one of
// +-u is congruent to -1 mod 3, so there is no choice to make.
inline i64 square_root_to_index(i64 u) {
    if (mod_floor(u, 3) == 2) return (u + 1) / 3;
    return (1 - u) / 3;
}

} // namespace detail

// A witness for n as a sum of four generalized octagonal numbers, one odd.
inline DecompositionWitness decompose(i64 n) {
    if (n < 1) throw std::invalid_argument("decompose: n must be >= 1");
    const i64 M = checked_add(checked_mul(3, n), 4);
    auto quad = detail::four_squares_two_nonzero(M);

    // Pivot on a member coprime to 3 whose removal leaves a nonzero triple.
    int pivot = -1;
    for (int i = 0; i < 4 && pivot < 0; ++i) {
        if (quad[i] % 3 == 0) continue;
        for (int j = 0; j < 4; ++j)
            if (j != i && quad[j] != 0) {
                pivot = i;
                break;
            }
    }
    if (pivot < 0) throw std::logic_error("decompose: no pivot member (internal bug)");

    std::array<i64, 3> rest{};
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != pivot) rest[k++] = quad[i];
    Triple fixed = normalize_triple_mod3({rest[0], rest[1], rest[2]});

    std::array<i64, 4> roots{quad[pivot], fixed.x, fixed.y, fixed.z};
    DecompositionWitness w;
    w.target = n;
    std::array<std::pair<i64, i64>, 4> pairs; // (value, index)
    for (int i = 0; i < 4; ++i) {
        i64 t = detail::square_root_to_index(roots[i]);
        pairs[i] = {polygonal_value(8, t), t};
    }
    std::sort(pairs.begin(), pairs.end());
    for (int i = 0; i < 4; ++i) {
        w.values[i] = pairs[i].first;
        w.indices[i] = pairs[i].second;
    }
    if (!w.valid())
        throw std::logic_error("decompose: witness post-check failed (internal bug)");
    return w;
}

// ---------------------------------------------------------------------------
// r(n) / s(n): unordered four-term representation counts
// ---------------------------------------------------------------------------

struct RsTable {
    std::vector<u64> r; // index n, 0 unused
    std::vector<u64> s;
};

// Counts for every n <= bound at once: one pass over ascending value
// quadruples v1 <= v2 <= v3 <= v4. Multisets of values are what is counted;
// 0 = p8(0) participates like any other value. Chunks of the outermost
// index run independently and the per-chunk tables are summed, so any
// thread count gives identical results.
inline RsTable count_representations(i64 bound, int threads = 1) {
    if (bound < 0) throw std::invalid_argument("count_representations: bound must be >= 0");
    const std::vector<i64> V = enumerate_values(8, Domain::AllIntegers, bound);
    const i64 nv = static_cast<i64>(V.size());
    std::vector<RsTable> parts(static_cast<size_t>(std::max(1, threads)));
    parallel_chunks(0, nv, threads, [&](size_t part, i64 lo, i64 hi) {
        auto& tab = parts[part];
        tab.r.assign(bound + 1, 0);
        tab.s.assign(bound + 1, 0);
        for (i64 i = lo; i < hi; ++i) {
            const i64 v1 = V[i];
            if (4 * v1 > bound) break;
            for (i64 j = i; j < nv; ++j) {
                const i64 v2 = V[j];
                if (v1 + 3 * v2 > bound) break;
                for (i64 k = j; k < nv; ++k) {
                    const i64 v3 = V[k];
                    const i64 base = v1 + v2 + v3;
                    if (base + v3 > bound) break;
                    const bool odd123 = ((v1 | v2 | v3) & 1) != 0;
                    for (i64 l = k; l < nv; ++l) {
                        const i64 t = base + V[l];
                        if (t > bound) break;
                        ++tab.r[t];
                        if (odd123 || (V[l] & 1)) ++tab.s[t];
                    }
                }
            }
        }
    });
    RsTable total;
    total.r.assign(bound + 1, 0);
    total.s.assign(bound + 1, 0);
    for (const auto& part : parts) {
        if (part.r.empty()) continue;
        for (i64 n = 0; n <= bound; ++n) {
            total.r[n] += part.r[n];
            total.s[n] += part.s[n];
        }
    }
    return total;
}

// Per-n multiset count; s restricts to multisets containing an odd value.
namespace detail {
inline std::pair<i64, i64> rs_single(i64 n) {
    const std::vector<i64> V = enumerate_values(8, Domain::AllIntegers, n);
    const i64 nv = static_cast<i64>(V.size());
    i64 r = 0, s = 0;
    for (i64 i = 0; i < nv; ++i) {
        if (4 * V[i] > n) break;
        for (i64 j = i; j < nv; ++j) {
            if (V[i] + 3 * V[j] > n) break;
            for (i64 k = j; k < nv; ++k) {
                i64 rem = n - V[i] - V[j] - V[k];
                if (rem < V[k]) break;
                if (!std::binary_search(V.begin() + k, V.end(), rem)) continue;
                ++r;
                if (((V[i] | V[j] | V[k] | rem) & 1) != 0) ++s;
            }
        }
    }
    return {r, s};
}
} // namespace detail

inline i64 r_count(i64 n) {
    if (n < 1) throw std::invalid_argument("r_count: n must be >= 1");
    return detail::rs_single(n).first;
}

inline i64 s_count(i64 n) {
    if (n < 1) throw std::invalid_argument("s_count: n must be >= 1");
    return detail::rs_single(n).second;
}

struct UniqueScan {
    std::vector<i64> r_unique; // n in [1,bound] with r(n) = 1, ascending
    std::vector<i64> s_unique; // n in [1,bound] with s(n) = 1, ascending
};

inline UniqueScan scan_unique(i64 bound, int threads = 1) {
    if (bound < 1) throw std::invalid_argument("scan_unique: bound must be >= 1");
    RsTable tab = count_representations(bound, threads);
    UniqueScan out;
    for (i64 n = 1; n <= bound; ++n) {
        if (tab.r[n] == 1) out.r_unique.push_back(n);
        if (tab.s[n] == 1) out.s_unique.push_back(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// predicted uniqueness sets
// ---------------------------------------------------------------------------

enum class CountKind { R, S };

// Predicted membership of the r(n)=1 / s(n)=1 sets: 3n+4 must lie in a
// finite odd base {7,13,19,25,31,43} (for s also 4x that base) or in the
// two-power family {2^(2k): k>=2} union {2^(2n+1) t : t in {5,11,23}}.
// Note the base includes 25: r(7)=s(7)=1 with 3*7+4 = 25, and s(32)=1 with
// 3*32+4 = 100 = 4*25, as the scans confirm.
inline bool predicted_unique(i64 n, CountKind which) {
    if (n < 1) throw std::invalid_argument("predicted_unique: n must be >= 1");
    i64 m = checked_add(checked_mul(3, n), 4);
    for (i64 b : {7, 13, 19, 25, 31, 43}) {
        if (m == b) return true;
        if (which == CountKind::S && m == 4 * b) return true;
    }
    int e = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++e;
    }
    if (m == 1) return e >= 4 && e % 2 == 0;
    return (m == 5 || m == 11 || m == 23) && e % 2 == 1;
}

} // namespace octoform
