#pragma once

// Fixed-size bitset tuned for the sumset sieves: the only non-trivial
// operation is |= (src << shift), which lets a representability sieve be
// built layer by layer in O(values * bound/64) word operations.

#include <cstdint>
#include <vector>
#include <stdexcept>

#include "octoform/arith.hpp"

namespace octoform {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(i64 nbits)
        : nbits_(nbits), words_(static_cast<size_t>((nbits + 63) / 64), 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative size");
    }

    i64 size() const { return nbits_; }

    void set(i64 i) {
        words_[static_cast<size_t>(i >> 6)] |= u64{1} << (i & 63);
    }

    bool test(i64 i) const {
        if (i < 0 || i >= nbits_) return false;
        return (words_[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1;
    }

    // this |= (src << shift); bits shifted past size() are dropped.
    void or_shifted(const Bitset& src, i64 shift) {
        if (shift < 0) throw std::invalid_argument("or_shifted: negative shift");
        if (shift >= nbits_) return;
        const size_t wshift = static_cast<size_t>(shift >> 6);
        const int bshift = static_cast<int>(shift & 63);
        const size_t nw = words_.size();
        if (bshift == 0) {
            for (size_t i = wshift; i < nw; ++i)
                words_[i] |= src.words_[i - wshift];
        } else {
            for (size_t i = wshift; i < nw; ++i) {
                u64 lo = src.words_[i - wshift] << bshift;
                u64 hi = (i > wshift)
                             ? src.words_[i - wshift - 1] >> (64 - bshift)
                             : 0;
                words_[i] |= lo | hi;
            }
        }
        trim();
    }

    void or_with(const Bitset& other) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    }

    i64 count() const {
        i64 c = 0;
        for (u64 w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Indices in [0, size) whose bit is clear, ascending.
    std::vector<i64> zeros() const {
        std::vector<i64> out;
        for (i64 i = 0; i < nbits_; ++i)
            if (!test(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

private:
    void trim() {
        // keep bits past nbits_ clear so equality stays well-defined
        int tail = static_cast<int>(nbits_ & 63);
        if (tail != 0 && !words_.empty())
            words_.back() &= (u64{1} << tail) - 1;
    }

    i64 nbits_ = 0;
    std::vector<u64> words_;
};

// Representability sieve of { v1 + ... + vk : vi in lists[i] }, restricted
// to [0, bound]. Exact because every summand is nonnegative.
inline Bitset sum_sieve(const std::vector<std::vector<i64>>& lists, i64 bound) {
    Bitset cur(bound + 1);
    cur.set(0);
    for (const auto& list : lists) {
        Bitset next(bound + 1);
        for (i64 v : list) {
            if (v > bound) break;
            next.or_shifted(cur, v);
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace octoform
