#pragma once

// Long-running verification harness: the prime+pentagonal cover scan with
// checkpoint/resume, generic polygonal universality scans over N (with
// second-polygonal slots and argument-parity side conditions), and the
// batched checks behind the CLI's `conjecture` subcommand.

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "octoform/arith.hpp"
#include "octoform/bitset.hpp"
#include "octoform/forms.hpp"
#include "octoform/octagonal.hpp"
#include "octoform/parallel.hpp"
#include "octoform/polygonal.hpp"
#include "octoform/report.hpp"
#include "octoform/universality.hpp"

namespace octoform {

// ---------------------------------------------------------------------------
// segmented prime sieve
// ---------------------------------------------------------------------------

// Primality bitmap for [0, limit], built segment by segment so the working
// set stays cache-sized while the result supports O(1) lookups.
inline Bitset segmented_prime_sieve(i64 limit) {
    if (limit < 0) throw std::invalid_argument("segmented_prime_sieve: negative limit");
    Bitset primes(limit + 1);
    if (limit < 2) return primes;
    const i64 root = isqrt(limit);
    std::vector<char> small(root + 1, 1);
    small[0] = small[1] = 0;
    for (i64 i = 2; i * i <= root; ++i)
        if (small[i])
            for (i64 j = i * i; j <= root; j += i) small[j] = 0;
    std::vector<i64> base;
    for (i64 i = 2; i <= root; ++i)
        if (small[i]) base.push_back(i);

    const i64 segment = 1 << 20;
    std::vector<char> mark;
    for (i64 lo = 2; lo <= limit; lo += segment) {
        const i64 hi = std::min(limit, lo + segment - 1);
        mark.assign(hi - lo + 1, 1);
        for (i64 p : base) {
            if (p * p > hi) break;
            i64 start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (i64 j = start; j <= hi; j += p) mark[j - lo] = 0;
        }
        for (i64 n = lo; n <= hi; ++n)
            if (mark[n - lo]) primes.set(n);
    }
    return primes;
}

// ---------------------------------------------------------------------------
// checkpointing
// ---------------------------------------------------------------------------

inline u64 fnv1a_digest(const std::string& s) {
    u64 h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct CheckpointState {
    std::string task;
    u64 params_digest = 0;
    i64 verified_upto = -1;      // last fully verified n
    std::vector<i64> violations; // ascending
    i64 elapsed_ms = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["task"] = task;
        j["params_digest"] = params_digest;
        j["verified_upto"] = verified_upto;
        j["violations"] = violations;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }

    static CheckpointState from_json(const nlohmann::ordered_json& j) {
        CheckpointState s;
        s.task = j.at("task").get<std::string>();
        s.params_digest = j.at("params_digest").get<u64>();
        s.verified_upto = j.at("verified_upto").get<i64>();
        s.violations = j.at("violations").get<std::vector<i64>>();
        s.elapsed_ms = j.at("elapsed_ms").get<i64>();
        return s;
    }

    // write-temp-then-rename so a crash never leaves a torn file
    void save_atomic(const std::filesystem::path& path) const {
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream os(tmp);
            if (!os) throw std::runtime_error("cannot write checkpoint: " + tmp.string());
            os << to_json().dump(2) << '\n';
        }
        std::filesystem::rename(tmp, path);
    }

    static std::optional<CheckpointState> load(const std::filesystem::path& path) {
        std::ifstream is(path);
        if (!is) return std::nullopt;
        nlohmann::ordered_json j;
        is >> j;
        return from_json(j);
    }
};

struct ScanOptions {
    int threads = 1;
    std::optional<std::filesystem::path> checkpoint_path;
    i64 checkpoint_every = i64{1} << 24; // values per checkpoint flush
    double checkpoint_seconds = 30.0;    // or this much wall clock, whichever first
};

// ---------------------------------------------------------------------------
// pentagonal + odd prime scan
// ---------------------------------------------------------------------------

// Violations among n <= bound of "n = p + generalized pentagonal with p an
// odd prime or zero". Each n is probed largest pentagonal value first so
// the remainders stay small and most n succeed within a handful of lookups.
inline ScanReport pentagonal_prime_scan(i64 bound, const ScanOptions& options = {}) {
    if (bound < 0) throw std::invalid_argument("pentagonal_prime_scan: bound must be >= 0");
    StopWatch watch;
    static const std::string kTask = "pentagonal-prime-scan";
    const u64 digest = fnv1a_digest(kTask);

    i64 start = 0;
    std::vector<i64> violations;
    i64 prior_ms = 0;
    if (options.checkpoint_path) {
        if (auto saved = CheckpointState::load(*options.checkpoint_path)) {
            if (saved->task != kTask || saved->params_digest != digest)
                throw std::invalid_argument("pentagonal_prime_scan: checkpoint digest mismatch");
            start = saved->verified_upto + 1;
            for (i64 v : saved->violations)
                if (v <= bound) violations.push_back(v);
            prior_ms = saved->elapsed_ms;
        }
    }

    const Bitset primes = segmented_prime_sieve(bound);
    const std::vector<i64> pent = enumerate_values(5, Domain::AllIntegers, bound);

    auto flush = [&](i64 upto) {
        if (!options.checkpoint_path) return;
        CheckpointState s;
        s.task = kTask;
        s.params_digest = digest;
        s.verified_upto = upto;
        s.violations = violations;
        s.elapsed_ms = prior_ms + watch.elapsed_ms();
        s.save_atomic(*options.checkpoint_path);
    };

    i64 since_flush = 0;
    StopWatch flush_watch;
    for (i64 lo = start; lo <= bound; lo += options.checkpoint_every) {
        const i64 hi = std::min(bound, lo + options.checkpoint_every - 1);
        std::vector<std::vector<i64>> parts(static_cast<size_t>(std::max(1, options.threads)));
        parallel_chunks(lo, hi + 1, options.threads, [&](size_t part, i64 a, i64 b) {
            auto& out = parts[part];
            for (i64 n = a; n < b; ++n) {
                bool ok = false;
                auto it = std::upper_bound(pent.begin(), pent.end(), n);
                while (it != pent.begin()) {
                    --it;
                    const i64 rem = n - *it;
                    if (rem == 0 || (rem % 2 == 1 && primes.test(rem))) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) out.push_back(n);
            }
        });
        auto merged = merge_sorted(parts);
        violations.insert(violations.end(), merged.begin(), merged.end());
        since_flush += hi - lo + 1;
        if (since_flush >= options.checkpoint_every ||
            flush_watch.elapsed_ms() >= static_cast<i64>(options.checkpoint_seconds * 1000)) {
            flush(hi);
            since_flush = 0;
            flush_watch = StopWatch();
        }
    }
    flush(bound);

    ScanReport rep;
    rep.task = kTask;
    rep.params["summand"] = "odd prime or zero, plus generalized pentagonal";
    rep.bound = bound;
    rep.verified_upto = bound;
    rep.set_exceptions(std::move(violations));
    rep.elapsed_ms = prior_ms + watch.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// generic polygonal sums over N / second N / Z
// ---------------------------------------------------------------------------

struct SumSlot {
    i64 coeff = 1;
    i64 order = 5;
    Domain domain = Domain::Naturals;
    Parity arg_parity = Parity::Any; // restriction on the argument, not the value
};

namespace detail {

inline std::vector<i64> slot_values(const SumSlot& slot, i64 bound) {
    const i64 cap = bound / slot.coeff;
    const bool pos = slot.domain != Domain::SecondNaturals;
    const bool neg = slot.domain != Domain::Naturals;
    std::vector<i64> vals;
    for (i64 k = 0;; ++k) {
        i64 a = polygonal_value(slot.order, k);
        i64 b = polygonal_value(slot.order, -k);
        if (k > 0 && a > cap && b > cap) break;
        bool parity_ok = slot.arg_parity == Parity::Any ||
                         (slot.arg_parity == Parity::Even ? k % 2 == 0 : k % 2 == 1);
        if (!parity_ok) continue;
        if (pos && a <= cap) vals.push_back(a * slot.coeff);
        if (neg && b <= cap) vals.push_back(b * slot.coeff);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

inline std::string slot_description(const std::vector<SumSlot>& slots) {
    std::ostringstream os;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) os << '+';
        if (slots[i].coeff != 1) os << slots[i].coeff << '*';
        os << 'p' << slots[i].order;
        switch (slots[i].domain) {
            case Domain::AllIntegers: os << "(Z)"; break;
            case Domain::Naturals: os << "(N)"; break;
            case Domain::SecondNaturals: os << "(N2)"; break;
        }
        if (slots[i].arg_parity == Parity::Odd) os << "[odd-arg]";
        if (slots[i].arg_parity == Parity::Even) os << "[even-arg]";
    }
    return os.str();
}

} // namespace detail

inline Bitset polygonal_sum_sieve(const std::vector<SumSlot>& slots, i64 bound) {
    if (slots.empty()) throw std::invalid_argument("polygonal_sum_sieve: no slots");
    if (bound < 0) throw std::invalid_argument("polygonal_sum_sieve: bound must be >= 0");
    for (const auto& s : slots) {
        if (s.coeff < 1)
            throw std::invalid_argument("polygonal_sum_sieve: coefficients must be >= 1");
        require_order(s.order);
    }
    std::vector<std::vector<i64>> lists;
    lists.reserve(slots.size());
    for (const auto& s : slots) lists.push_back(detail::slot_values(s, bound));
    return sum_sieve(lists, bound);
}

// Exceptional set of sum coeff_i * p_{order_i} over the stated domains,
// exact on [0, bound].
inline ScanReport polygonal_universal_scan(const std::vector<SumSlot>& slots, i64 bound) {
    StopWatch watch;
    ScanReport rep;
    rep.task = "polygonal-universal";
    rep.params["sum"] = detail::slot_description(slots);
    rep.bound = bound;
    rep.verified_upto = bound;
    rep.set_exceptions(polygonal_sum_sieve(slots, bound).zeros());
    rep.elapsed_ms = watch.elapsed_ms();
    return rep;
}

// Every n <= bound as a sum of four generalized heptagonal numbers; with
// the default bound 3500 the Legendre threshold 28*(7-2)^3 takes over
// beyond it, so an empty exceptional set closes the claim.
inline ScanReport heptagonal_four_sum_check(i64 bound = 3500) {
    std::vector<SumSlot> slots(4, SumSlot{1, 7, Domain::AllIntegers, Parity::Any});
    ScanReport rep = polygonal_universal_scan(slots, bound);
    rep.task = "heptagonal-four-sum";
    return rep;
}

// ---------------------------------------------------------------------------
// conjecture batteries
// ---------------------------------------------------------------------------
//
// Each runner returns one report per checked sum. `exceptions` holds
// conjecture VIOLATIONS (mismatches against the conjectured set), so the
// verdict/emptiness invariant of ScanReport doubles as the pass signal.
// Observed exceptional sets are surfaced through `counts`.

namespace detail {

inline ScanReport expect_empty(ScanReport raw, const std::string& task) {
    raw.task = task;
    std::map<std::string, i64> counts;
    counts["observed_exceptions"] = static_cast<i64>(raw.exceptions.size());
    raw.counts = counts;
    return raw; // exceptions already are the violations
}

inline ScanReport expect_exact(ScanReport raw, const std::string& task,
                               const std::vector<i64>& expected) {
    ScanReport rep = raw;
    rep.task = task;
    std::vector<i64> mismatches;
    std::set_symmetric_difference(raw.exceptions.begin(), raw.exceptions.end(),
                                  expected.begin(), expected.end(),
                                  std::back_inserter(mismatches));
    std::map<std::string, i64> counts;
    counts["observed_exceptions"] = static_cast<i64>(raw.exceptions.size());
    counts["expected_exceptions"] = static_cast<i64>(expected.size());
    rep.counts = counts;
    rep.set_exceptions(std::move(mismatches));
    return rep;
}

// For set-inclusion claims: everything above `threshold` must be
// representable, and the threshold itself must be the largest exception.
inline ScanReport expect_bounded(ScanReport raw, const std::string& task, i64 threshold) {
    ScanReport rep = raw;
    rep.task = task;
    std::vector<i64> violations;
    for (i64 e : raw.exceptions)
        if (e > threshold) violations.push_back(e);
    i64 maxe = raw.exceptions.empty() ? -1 : raw.exceptions.back();
    if (maxe != threshold) violations.push_back(threshold);
    std::sort(violations.begin(), violations.end());
    std::map<std::string, i64> counts;
    counts["observed_exceptions"] = static_cast<i64>(raw.exceptions.size());
    counts["max_exception"] = maxe;
    counts["threshold"] = threshold;
    rep.counts = counts;
    rep.set_exceptions(std::move(violations));
    return rep;
}

} // namespace detail

// Pentagonal sums over N (with second-pentagonal slots and the
// not-all-even-arguments side condition). `side_condition_all_four`
// switches the flagged alternative reading where the w slot participates
// in the parity condition as well.
inline std::vector<ScanReport> run_conjecture_5_2(i64 bound,
                                                  bool side_condition_all_four = false) {
    std::vector<ScanReport> out;
    const SumSlot p5{1, 5, Domain::Naturals, Parity::Any};
    const SumSlot p5bar{1, 5, Domain::SecondNaturals, Parity::Any};
    out.push_back(detail::expect_empty(
        polygonal_universal_scan({p5, p5, p5bar, p5bar}, bound), "conjecture-5.2(i)"));
    out.push_back(detail::expect_empty(
        polygonal_universal_scan({p5, p5, p5, p5bar}, bound), "conjecture-5.2(i)"));

    // refined claim: n = p5bar(w) + p5(x) + p5(y) + p5(z), w,x,y,z in N,
    // x,y,z not all even. A witness with an odd slot can always put it
    // first, so one odd-argument slot captures the whole condition.
    {
        SumSlot p5odd{1, 5, Domain::Naturals, Parity::Odd};
        Bitset bits = polygonal_sum_sieve({p5bar, p5odd, p5, p5}, bound);
        if (side_condition_all_four) {
            SumSlot p5bar_odd{1, 5, Domain::SecondNaturals, Parity::Odd};
            Bitset alt = polygonal_sum_sieve({p5bar_odd, p5, p5, p5}, bound);
            bits.or_with(alt);
        }
        StopWatch watch;
        ScanReport rep;
        rep.task = side_condition_all_four ? "conjecture-5.2(i)-refined[all-four]"
                                           : "conjecture-5.2(i)-refined";
        rep.params["sum"] = "p5(N2)+p5(N)+p5(N)+p5(N), args not all even";
        rep.bound = bound;
        rep.verified_upto = bound;
        std::vector<i64> bad;
        for (i64 n = 1; n <= bound; ++n)
            if (!bits.test(n)) bad.push_back(n);
        rep.set_exceptions(std::move(bad));
        rep.counts = std::map<std::string, i64>{
            {"observed_exceptions", static_cast<i64>(rep.exceptions.size())}};
        rep.elapsed_ms = watch.elapsed_ms();
        out.push_back(std::move(rep));
    }

    static const std::vector<std::array<i64, 3>> triples = {
        {1, 1, 2}, {1, 2, 2}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5},
        {1, 2, 6}, {1, 3, 6}, {2, 2, 4}, {2, 2, 6}, {2, 3, 4},
        {2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 4, 7}, {2, 4, 8}};
    for (const auto& [b, c, d] : triples) {
        std::vector<SumSlot> slots = {
            {1, 5, Domain::Naturals, Parity::Any},
            {b, 5, Domain::Naturals, Parity::Any},
            {c, 5, Domain::Naturals, Parity::Any},
            {d, 5, Domain::Naturals, Parity::Any}};
        out.push_back(detail::expect_empty(polygonal_universal_scan(slots, bound),
                                           "conjecture-5.2(ii)"));
    }
    return out;
}

// Twelve hexagonal sums over N, second-hexagonal slots included.
inline std::vector<ScanReport> run_conjecture_5_3(i64 bound) {
    using P = std::pair<i64, Domain>;
    static const std::vector<std::vector<P>> sums = {
        {{1, Domain::Naturals}, {1, Domain::Naturals}, {1, Domain::SecondNaturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {1, Domain::Naturals}, {2, Domain::Naturals}, {4, Domain::Naturals}},
        {{1, Domain::Naturals}, {2, Domain::Naturals}, {1, Domain::SecondNaturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {2, Domain::Naturals}, {1, Domain::SecondNaturals}, {2, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {1, Domain::Naturals}, {2, Domain::Naturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {1, Domain::Naturals}, {3, Domain::Naturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {1, Domain::Naturals}, {4, Domain::Naturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {1, Domain::Naturals}, {8, Domain::Naturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {2, Domain::Naturals}, {2, Domain::Naturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {2, Domain::Naturals}, {3, Domain::Naturals}, {1, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {2, Domain::Naturals}, {3, Domain::Naturals}, {2, Domain::SecondNaturals}},
        {{1, Domain::Naturals}, {2, Domain::Naturals}, {4, Domain::Naturals}, {1, Domain::SecondNaturals}}};
    std::vector<ScanReport> out;
    for (const auto& sum : sums) {
        std::vector<SumSlot> slots;
        for (auto [coeff, dom] : sum) slots.push_back({coeff, 6, dom, Parity::Any});
        out.push_back(detail::expect_empty(polygonal_universal_scan(slots, bound),
                                           "conjecture-5.3"));
    }
    return out;
}

// Heptagonal claims plus the p_m+2p_m+4p_m+8p_m family over Z.
inline std::vector<ScanReport> run_conjecture_5_4(i64 bound) {
    std::vector<ScanReport> out;
    // (i) p7+p7+2p7 over Z covers everything except 23
    {
        std::vector<SumSlot> t = {{1, 7, Domain::AllIntegers, Parity::Any},
                                  {1, 7, Domain::AllIntegers, Parity::Any},
                                  {2, 7, Domain::AllIntegers, Parity::Any}};
        out.push_back(detail::expect_exact(polygonal_universal_scan(t, bound),
                                           "conjecture-5.4(i)", {23}));
    }
    using P = std::pair<i64, Domain>;
    static const std::vector<std::vector<P>> mixed = {
        {{1, Domain::Naturals}, {1, Domain::SecondNaturals}, {2, Domain::Naturals}, {2, Domain::SecondNaturals}},
        {{1, Domain::SecondNaturals}, {1, Domain::Naturals}, {1, Domain::Naturals}, {2, Domain::Naturals}},
        {{1, Domain::SecondNaturals}, {1, Domain::Naturals}, {1, Domain::Naturals}, {3, Domain::Naturals}},
        {{1, Domain::SecondNaturals}, {1, Domain::Naturals}, {2, Domain::Naturals}, {3, Domain::Naturals}},
        {{1, Domain::SecondNaturals}, {1, Domain::Naturals}, {2, Domain::Naturals}, {8, Domain::Naturals}}};
    for (const auto& sum : mixed) {
        std::vector<SumSlot> slots;
        for (auto [coeff, dom] : sum) slots.push_back({coeff, 7, dom, Parity::Any});
        out.push_back(detail::expect_empty(polygonal_universal_scan(slots, bound),
                                           "conjecture-5.4(i)"));
    }
    for (i64 m : {7, 9, 10, 11, 12, 13, 14}) {
        std::vector<SumSlot> slots;
        for (i64 c : {1, 2, 4, 8}) slots.push_back({c, m, Domain::AllIntegers, Parity::Any});
        out.push_back(detail::expect_empty(polygonal_universal_scan(slots, bound),
                                           "conjecture-5.4(ii)"));
    }
    return out;
}

// The five quaternary octagonal triples conjectured universal over Z, and
// the five with the mixed (Z,N,N,N) domains.
inline std::vector<ScanReport> run_conjecture_1_1(i64 bound_z, i64 bound_mixed) {
    std::vector<ScanReport> out;
    for (const auto& [b, c, d] : conjectured_universal_bcd()) {
        QuaternarySum sum({1, b, c, d});
        out.push_back(detail::expect_empty(check_universal(sum, bound_z),
                                           "conjecture-1.1(i)"));
    }
    for (const auto& [b, c, d] : mixed_domain_bcd()) {
        QuaternarySum sum({1, b, c, d},
                          {Domain::AllIntegers, Domain::Naturals, Domain::Naturals,
                           Domain::Naturals});
        out.push_back(detail::expect_empty(check_universal(sum, bound_mixed),
                                           "conjecture-1.1(ii)"));
    }
    return out;
}

// Ternary octagonal sums: two exact exceptional sets, three inclusion
// claims with sharp thresholds.
inline std::vector<ScanReport> run_conjecture_1_2(i64 bound) {
    std::vector<ScanReport> out;
    out.push_back(detail::expect_exact(ternary_scan({1, 1, 3}, bound), "conjecture-1.2",
                                       {7, 14, 18, 91}));
    out.push_back(detail::expect_exact(ternary_scan({1, 1, 6}, bound), "conjecture-1.2",
                                       {3, 4, 18, 20, 25, 108, 298}));
    out.push_back(detail::expect_bounded(ternary_scan({1, 3, 3}, bound), "conjecture-1.2", 3265));
    out.push_back(detail::expect_bounded(ternary_scan({1, 3, 7}, bound), "conjecture-1.2", 1774));
    out.push_back(detail::expect_bounded(ternary_scan({1, 3, 9}, bound), "conjecture-1.2", 446));
    return out;
}

// scan_unique versus the predicted membership sets; exceptions are the n
// where the two disagree.
inline std::vector<ScanReport> run_conjecture_3_1(i64 bound, int threads = 1) {
    StopWatch watch;
    UniqueScan scan = scan_unique(bound, threads);
    std::vector<i64> mismatches;
    auto compare = [&](const std::vector<i64>& list, CountKind kind) {
        size_t idx = 0;
        for (i64 n = 1; n <= bound; ++n) {
            bool scanned = idx < list.size() && list[idx] == n;
            if (scanned) ++idx;
            if (scanned != predicted_unique(n, kind)) mismatches.push_back(n);
        }
    };
    compare(scan.r_unique, CountKind::R);
    compare(scan.s_unique, CountKind::S);
    std::sort(mismatches.begin(), mismatches.end());
    mismatches.erase(std::unique(mismatches.begin(), mismatches.end()), mismatches.end());
    ScanReport rep;
    rep.task = "conjecture-3.1";
    rep.params["check"] = "scan_unique == predicted_unique on r and s";
    rep.bound = bound;
    rep.verified_upto = bound;
    rep.counts = std::map<std::string, i64>{
        {"r_unique", static_cast<i64>(scan.r_unique.size())},
        {"s_unique", static_cast<i64>(scan.s_unique.size())}};
    rep.set_exceptions(std::move(mismatches));
    rep.elapsed_ms = watch.elapsed_ms();
    return {rep};
}

} // namespace octoform
