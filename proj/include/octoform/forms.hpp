#pragma once

// Diagonal quadratic-form arithmetic: exact representation counts by
// divisor formulas, closed-form representability predicates with their
// exceptional sets, constrained brute-force enumeration (the oracle the
// rest of the library is checked against), and the supporting integer
// machinery (deterministic Miller-Rabin, Pollard rho, Jacobi symbol).

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "octoform/arith.hpp"

namespace octoform {

// ---------------------------------------------------------------------------
// primality / factorization
// ---------------------------------------------------------------------------

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin over the full 64-bit range.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = __builtin_ctzll(d);
    d >>= s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Brent-cycle Pollard rho; n must be odd, composite, > 1.
inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::__gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace detail

struct Factorization {
    std::vector<std::pair<i64, int>> factors; // ascending primes

    i64 value() const {
        i128 v = 1;
        for (auto [p, e] : factors)
            for (int i = 0; i < e; ++i) v *= p;
        return narrow_i128(v);
    }
};

// Trial division up to 1e6, Pollard rho for whatever survives.
inline Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    u64 m = static_cast<u64>(n);
    auto push = [&](i64 p) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.push_back({p, 1});
    };
    for (u64 p : {2ull, 3ull, 5ull}) {
        while (m % p == 0) {
            push(static_cast<i64>(p));
            m /= p;
        }
    }
    for (u64 p = 7; p <= 1000000 && p * p <= m; p += 2) {
        while (m % p == 0) {
            push(static_cast<i64>(p));
            m /= p;
        }
    }
    if (m > 1) {
        std::vector<u64> rest;
        detail::factor_rec(m, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) push(static_cast<i64>(p));
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

// Sum of all positive divisors, from a factorization.
inline i64 divisor_sigma(const Factorization& f) {
    i128 s = 1;
    for (auto [p, e] : f.factors) {
        i128 term = 1, pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return narrow_i128(s);
}

// ---------------------------------------------------------------------------
// Jacobi symbol
// ---------------------------------------------------------------------------

// Standard Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol
// when n is prime.
inline int jacobi_symbol(i64 a, i64 n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: n must be odd and positive");
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// ---------------------------------------------------------------------------
// exact representation counts
// ---------------------------------------------------------------------------

// Number of (w,x,y,z) in Z^4 with w^2+x^2+y^2+z^2 = n, via the divisor sum
// 8 * sum_{d | n, 4 !| d} d. With n = 2^a n0 (n0 odd) the divisors not
// divisible by 4 are d0 and 2 d0 for d0 | n0, so the sum is sigma(n0) for
// a = 0 and 3 sigma(n0) otherwise.
inline i64 r4_count(i64 n) {
    if (n < 1) throw std::invalid_argument("r4_count: n must be >= 1");
    int a = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++a;
    }
    i64 s = divisor_sigma(factorize(n));
    return checked_mul(8, a == 0 ? s : checked_mul(3, s));
}

// Number of (w,x,y,z) in Z^4 with w^2+x^2+y^2+4z^2 = n. Writing n = 2^a n0
// with n0 odd, the count is
//   2 (2 + (-1)^((n0-1)/2)) sigma(n0)   a = 0
//   12 sigma(n0)                        a = 1
//   8  sigma(n0)                        a = 2
//   24 sigma(n0)                        a > 2
inline i64 liouville_pepin_count(i64 n) {
    if (n < 1) throw std::invalid_argument("liouville_pepin_count: n must be >= 1");
    int a = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++a;
    }
    i64 s = divisor_sigma(factorize(n));
    switch (a) {
        case 0: return checked_mul(2 * (2 + (((n - 1) / 2) % 2 == 0 ? 1 : -1)), s);
        case 1: return checked_mul(12, s);
        case 2: return checked_mul(8, s);
        default: return checked_mul(24, s);
    }
}

// Number of (x,y,z) in Z^3 with x^2 + y^2 + 2z^2 = m^2 for odd m, by the
// Cooper-Lam product
//   4 * prod_{p | m, p > 2} (p^(e+1) - 1 - (-2/p)(p^e - 1)) / (p - 1).
inline i64 cooper_lam_count(i64 m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("cooper_lam_count: m must be odd and positive");
    i128 result = 4;
    for (auto [p, e] : factorize(m).factors) {
        int chi = jacobi_symbol(-2, p);
        i128 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        i128 num = pe * p - 1 - static_cast<i128>(chi) * (pe - 1);
        result = result * num / (p - 1);
    }
    return narrow_i128(result);
}

// ---------------------------------------------------------------------------
// constrained enumeration (the brute-force oracle)
// ---------------------------------------------------------------------------

struct DiagonalForm {
    std::vector<i64> coeffs; // c1 x1^2 + ... + ck xk^2, all ci >= 1

    explicit DiagonalForm(std::vector<i64> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("DiagonalForm: empty form");
        for (i64 ci : coeffs)
            if (ci < 1) throw std::invalid_argument("DiagonalForm: coefficients must be >= 1");
    }
};

enum class Parity { Any, Even, Odd };

struct VariableConstraints {
    struct Slot {
        bool coprime_to_3 = false;
        Parity parity = Parity::Any;
        bool nonzero = false;
    };
    std::vector<Slot> slots;                      // missing slots mean "no constraint"
    std::optional<std::vector<size_t>> even_among; // at least one of these slots even
    int min_nonzero = 0;                           // at least this many slots nonzero

    Slot slot(size_t i) const { return i < slots.size() ? slots[i] : Slot{}; }

    static VariableConstraints none() { return {}; }

    static VariableConstraints coprime_to_3_all(size_t k) {
        VariableConstraints c;
        c.slots.assign(k, Slot{true, Parity::Any, false});
        return c;
    }

    static VariableConstraints nonzero_all(size_t k) {
        VariableConstraints c;
        c.slots.assign(k, Slot{false, Parity::Any, true});
        return c;
    }
};

namespace detail {

inline bool slot_admits(const VariableConstraints::Slot& s, i64 x) {
    if (s.nonzero && x == 0) return false;
    if (s.coprime_to_3 && mod_floor(x, 3) == 0) return false;
    if (s.parity == Parity::Even && mod_floor(x, 2) != 0) return false;
    if (s.parity == Parity::Odd && mod_floor(x, 2) != 1) return false;
    return true;
}

// Counting walks |x| per slot and multiplies by the sign choices (2 for
// nonzero, 1 for zero); parity, zeroness and mod-3 class are sign-blind,
// so the group flags can be tracked on absolute values.
inline i64 count_rec(const DiagonalForm& form, const VariableConstraints& cons,
                     size_t i, i64 rem, int nonzero_so_far, bool even_seen) {
    const size_t k = form.coeffs.size();
    if (i == k - 1) {
        i64 c = form.coeffs[i];
        if (rem % c != 0) return 0;
        i64 q = rem / c;
        i64 x = isqrt(q);
        if (x * x != q) return 0;
        if (!slot_admits(cons.slot(i), x)) return 0;
        int nz = nonzero_so_far + (x != 0 ? 1 : 0);
        if (nz < cons.min_nonzero) return 0;
        if (cons.even_among) {
            bool even_here = even_seen;
            for (size_t s : *cons.even_among)
                if (s == i && x % 2 == 0) even_here = true;
            if (!even_here) return 0;
        }
        return x == 0 ? 1 : 2;
    }
    i64 c = form.coeffs[i];
    i64 r = isqrt(rem / c);
    i64 total = 0;
    const auto sc = cons.slot(i);
    bool in_even_group = false;
    if (cons.even_among)
        for (size_t s : *cons.even_among)
            if (s == i) in_even_group = true;
    for (i64 x = 0; x <= r; ++x) {
        i64 v = c * x * x;
        if (v > rem) break;
        if (!slot_admits(sc, x)) continue;
        i64 sub = count_rec(form, cons, i + 1, rem - v,
                            nonzero_so_far + (x != 0 ? 1 : 0),
                            even_seen || (in_even_group && x % 2 == 0));
        total += (x == 0 ? sub : 2 * sub);
    }
    return total;
}

inline bool exists_rec(const DiagonalForm& form, const VariableConstraints& cons,
                       size_t i, i64 rem, int nonzero_so_far, bool even_seen) {
    const size_t k = form.coeffs.size();
    if (i == k - 1) {
        i64 c = form.coeffs[i];
        if (rem % c != 0) return false;
        i64 q = rem / c;
        i64 x = isqrt(q);
        if (x * x != q) return false;
        if (!slot_admits(cons.slot(i), x)) return false;
        if (nonzero_so_far + (x != 0 ? 1 : 0) < cons.min_nonzero) return false;
        if (cons.even_among) {
            bool even_here = even_seen;
            for (size_t s : *cons.even_among)
                if (s == i && x % 2 == 0) even_here = true;
            if (!even_here) return false;
        }
        return true;
    }
    i64 c = form.coeffs[i];
    i64 r = isqrt(rem / c);
    const auto sc = cons.slot(i);
    bool in_even_group = false;
    if (cons.even_among)
        for (size_t s : *cons.even_among)
            if (s == i) in_even_group = true;
    for (i64 x = 0; x <= r; ++x) {
        i64 v = c * x * x;
        if (v > rem) break;
        if (!slot_admits(sc, x)) continue;
        if (exists_rec(form, cons, i + 1, rem - v, nonzero_so_far + (x != 0 ? 1 : 0),
                       even_seen || (in_even_group && x % 2 == 0)))
            return true;
    }
    return false;
}

inline void enumerate_rec(const DiagonalForm& form, const VariableConstraints& cons,
                          size_t i, i64 rem, std::vector<i64>& prefix,
                          std::vector<std::vector<i64>>& out) {
    const size_t k = form.coeffs.size();
    if (i == k) {
        if (rem != 0) return;
        int nz = 0;
        bool even_ok = !cons.even_among;
        for (size_t j = 0; j < k; ++j)
            if (prefix[j] != 0) ++nz;
        if (cons.even_among)
            for (size_t s : *cons.even_among)
                if (s < k && prefix[s] % 2 == 0) even_ok = true;
        if (nz < cons.min_nonzero || !even_ok) return;
        out.push_back(prefix);
        return;
    }
    i64 c = form.coeffs[i];
    i64 r = isqrt(rem / c);
    const auto sc = cons.slot(i);
    for (i64 x = -r; x <= r; ++x) {
        i64 v = c * x * x;
        if (v > rem) continue;
        if (!slot_admits(sc, x)) continue;
        prefix.push_back(x);
        enumerate_rec(form, cons, i + 1, rem - v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

// Number of ordered integer solutions of c1 x1^2 + ... + ck xk^2 = n
// satisfying the constraints.
inline i64 count_constrained(const DiagonalForm& form, i64 n,
                             const VariableConstraints& cons = {}) {
    if (n < 0) throw std::invalid_argument("count_constrained: n must be >= 0");
    return detail::count_rec(form, cons, 0, n, 0, false);
}

// Short-circuiting variant of count_constrained(...) > 0.
inline bool exists_constrained(const DiagonalForm& form, i64 n,
                               const VariableConstraints& cons = {}) {
    if (n < 0) throw std::invalid_argument("exists_constrained: n must be >= 0");
    return detail::exists_rec(form, cons, 0, n, 0, false);
}

// All ordered solutions, lexicographically ascending.
inline std::vector<std::vector<i64>> enumerate_constrained(
    const DiagonalForm& form, i64 n, const VariableConstraints& cons = {}) {
    if (n < 0) throw std::invalid_argument("enumerate_constrained: n must be >= 0");
    std::vector<std::vector<i64>> out;
    std::vector<i64> prefix;
    detail::enumerate_rec(form, cons, 0, n, prefix, out);
    return out;
}

// ---------------------------------------------------------------------------
// closed-form representability predicates
// ---------------------------------------------------------------------------

// n is a sum of three squares iff n != 4^k (8l+7).
inline bool is_sum_three_squares(i64 n) {
    if (n < 0) throw std::invalid_argument("is_sum_three_squares: n must be >= 0");
    while (n != 0 && n % 4 == 0) n /= 4;
    return n % 8 != 7;
}

// Exceptional sets of the three ternary forms used by the universality
// proofs: x^2+y^2+5z^2 misses 4^k(8l+3), x^2+2y^2+4z^2 misses 4^k(16l+14),
// x^2+2y^2+5z^2 misses 25^k(25l +- 10).
inline bool ternary_representable(const std::array<i64, 3>& form_id, i64 n) {
    if (n < 0) throw std::invalid_argument("ternary_representable: n must be >= 0");
    if (form_id == std::array<i64, 3>{1, 1, 5}) {
        while (n != 0 && n % 4 == 0) n /= 4;
        return n % 8 != 3;
    }
    if (form_id == std::array<i64, 3>{1, 2, 4}) {
        while (n != 0 && n % 4 == 0) n /= 4;
        return n % 16 != 14;
    }
    if (form_id == std::array<i64, 3>{1, 2, 5}) {
        while (n != 0 && n % 25 == 0) n /= 25;
        i64 r = n % 25;
        return r != 10 && r != 15;
    }
    throw std::invalid_argument("ternary_representable: unknown form id");
}

// n is a sum of four nonzero squares iff it is outside
// {1,3,5,9,11,17,29,41} and {2,6,14} * 4^k.
inline bool four_nonzero_squares(i64 n) {
    if (n < 1) throw std::invalid_argument("four_nonzero_squares: n must be >= 1");
    for (i64 bad : {1, 3, 5, 9, 11, 17, 29, 41})
        if (n == bad) return false;
    while (n % 4 == 0) n /= 4;
    return n != 2 && n != 6 && n != 14;
}

// ---------------------------------------------------------------------------
// the residue-escape chooser
// ---------------------------------------------------------------------------

enum class SquareShiftMode { Add, Subtract };

namespace detail {

// v in {4^k (8m + r) : k in N, m in Z}, any sign of v.
inline bool in_pow4_residue_any(i64 v, int r) {
    if (v == 0) return false;
    i64 sign = v < 0 ? -1 : 1;
    i64 u = v < 0 ? -v : v;
    while (u % 4 == 0) u /= 4;
    return mod_floor(sign * u, 8) == r;
}

// v in S = {8q - d : q in Z} union {4^k (8l + r) : k,l in N}; the second
// set has positive members only.
inline bool in_subtract_escape_set(i64 v, i64 d, int r) {
    if (mod_floor(v + d, 8) == 0) return true;
    if (v <= 0) return false;
    i64 u = v;
    while (u % 4 == 0) u /= 4;
    return u % 8 == r;
}

} // namespace detail

// Picks the first w among the candidates (a odd, b = 2 mod 4, c = 0 mod 4)
// for which n + d w^2 avoids {4^k(8m+r)} (Add, needs d != r mod 8) or
// n - d w^2 avoids S = {8q-d} union {4^k(8l+r)} (Subtract). Requires
// d = r mod 4. The residue stagger of the three candidates guarantees a
// choice exists, so an exhausted search is reported as an internal error.
inline i64 choose_square_shift(i64 n, i64 d, int r, const std::array<i64, 3>& candidates,
                               SquareShiftMode mode) {
    if (r != 1 && r != 3 && r != 5 && r != 7)
        throw std::invalid_argument("choose_square_shift: r must be one of 1,3,5,7");
    if (mod_floor(candidates[0], 2) != 1)
        throw std::invalid_argument("choose_square_shift: first candidate must be odd");
    if (mod_floor(candidates[1], 4) != 2)
        throw std::invalid_argument("choose_square_shift: second candidate must be 2 mod 4");
    if (mod_floor(candidates[2], 4) != 0)
        throw std::invalid_argument("choose_square_shift: third candidate must be 0 mod 4");
    if (mod_floor(d - r, 4) != 0)
        throw std::invalid_argument("choose_square_shift: d must be congruent to r mod 4");
    if (mode == SquareShiftMode::Add && mod_floor(d - r, 8) == 0)
        throw std::invalid_argument("choose_square_shift: Add mode needs d != r mod 8");
    for (i64 w : candidates) {
        i64 dw2 = checked_mul(d, checked_mul(w, w));
        if (mode == SquareShiftMode::Add) {
            if (!detail::in_pow4_residue_any(checked_add(n, dw2), r)) return w;
        } else {
            if (!detail::in_subtract_escape_set(checked_sub(n, dw2), d, r)) return w;
        }
    }
    throw std::logic_error("choose_square_shift: no admissible candidate (internal bug)");
}

} // namespace octoform
