#pragma once

// Shared integer helpers: exact square roots, overflow-checked 64-bit
// arithmetic, and floor-mod. Everything here is branch-light and
// allocation-free; scans call these in tight loops.

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

namespace octoform {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// floor(sqrt(n)) for n >= 0, exact over the full i64 range.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

// a*b with overflow detection; overflow is an error, never a wrap.
inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

// Mathematical mod: result in [0, m) for m > 0, any sign of a.
inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// Narrow a 128-bit value back to 64 bits, loudly.
inline i64 narrow_i128(i128 v) {
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<i64>(v);
}

} // namespace octoform
