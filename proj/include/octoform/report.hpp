#pragma once

// ScanReport: the serializable outcome of every verification run, with a
// stable JSON schema so reports from different runs diff cleanly:
//   {task, params, bound, verdict, exceptions, first_counterexample,
//    counts, verified_upto, elapsed_ms}
// Identical inputs give byte-identical JSON apart from elapsed_ms.

#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "octoform/arith.hpp"
#include "octoform/bitset.hpp"

namespace octoform {

enum class Verdict { UniversalUpToBound, Counterexample };

inline std::string to_string(Verdict v) {
    return v == Verdict::UniversalUpToBound ? "universal-up-to-bound" : "counterexample";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "universal-up-to-bound") return Verdict::UniversalUpToBound;
    if (s == "counterexample") return Verdict::Counterexample;
    throw std::invalid_argument("unknown verdict: " + s);
}

struct ScanReport {
    std::string task;
    std::map<std::string, std::string> params; // sorted keys, deterministic
    i64 bound = 0;
    Verdict verdict = Verdict::UniversalUpToBound;
    std::vector<i64> exceptions; // ascending
    std::optional<i64> first_counterexample;
    std::optional<std::map<std::string, i64>> counts;
    i64 verified_upto = 0;
    i64 elapsed_ms = 0;

    void set_exceptions(std::vector<i64> ex) {
        exceptions = std::move(ex);
        if (exceptions.empty()) {
            verdict = Verdict::UniversalUpToBound;
            first_counterexample.reset();
        } else {
            verdict = Verdict::Counterexample;
            first_counterexample = exceptions.front();
        }
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["task"] = task;
        j["params"] = params;
        j["bound"] = bound;
        j["verdict"] = to_string(verdict);
        j["exceptions"] = exceptions;
        if (first_counterexample)
            j["first_counterexample"] = *first_counterexample;
        else
            j["first_counterexample"] = nullptr;
        if (counts)
            j["counts"] = *counts;
        else
            j["counts"] = nullptr;
        j["verified_upto"] = verified_upto;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }

    static ScanReport from_json(const nlohmann::ordered_json& j) {
        ScanReport r;
        r.task = j.at("task").get<std::string>();
        r.params = j.at("params").get<std::map<std::string, std::string>>();
        r.bound = j.at("bound").get<i64>();
        r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
        r.exceptions = j.at("exceptions").get<std::vector<i64>>();
        if (!j.at("first_counterexample").is_null())
            r.first_counterexample = j.at("first_counterexample").get<i64>();
        if (!j.at("counts").is_null())
            r.counts = j.at("counts").get<std::map<std::string, i64>>();
        r.verified_upto = j.at("verified_upto").get<i64>();
        r.elapsed_ms = j.at("elapsed_ms").get<i64>();
        return r;
    }

    // Equality with timing ignored; what determinism tests compare.
    bool same_outcome(const ScanReport& o) const {
        return task == o.task && params == o.params && bound == o.bound &&
               verdict == o.verdict && exceptions == o.exceptions &&
               first_counterexample == o.first_counterexample && counts == o.counts &&
               verified_upto == o.verified_upto;
    }
};

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    i64 elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// CSV dump of a representability sieve: header row then one line per n.
inline void write_csv_sieve(std::ostream& os, const Bitset& bits) {
    os << "n,representable\n";
    for (i64 n = 0; n < bits.size(); ++n)
        os << n << ',' << (bits.test(n) ? 1 : 0) << '\n';
}

} // namespace octoform
