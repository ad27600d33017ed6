// octoform: command-line front end for the generalized-polygonal
// representability library. One subcommand per claim family; every scan can
// emit its ScanReport as JSON and sieve commands can dump n,representable
// CSV tables. Exit status: 0 success, 1 a verification found a violation,
// 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "octoform/octoform.hpp"

namespace {

using namespace octoform;

std::vector<i64> parse_coeffs(const std::string& text) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw CLI::ValidationError("--coeffs", "no coefficients given");
    return out;
}

std::vector<Domain> parse_domains(const std::string& text) {
    std::vector<Domain> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "z" || item == "Z") out.push_back(Domain::AllIntegers);
        else if (item == "n" || item == "N") out.push_back(Domain::Naturals);
        else if (item == "n2" || item == "N2") out.push_back(Domain::SecondNaturals);
        else throw CLI::ValidationError("--domains", "expected z, n or n2: " + item);
    }
    return out;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write output file: " + path);
    os << j.dump(2) << '\n';
}

void emit_reports(const std::string& output, const std::vector<ScanReport>& reports) {
    if (output.empty()) return;
    if (reports.size() == 1) {
        write_json(output, reports[0].to_json());
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        write_json(output, arr);
    }
}

void print_report(const ScanReport& rep) {
    std::cout << rep.task;
    auto it = rep.params.find("sum");
    if (it != rep.params.end()) std::cout << "  " << it->second;
    std::cout << "  bound=" << rep.bound << "  " << to_string(rep.verdict);
    if (rep.first_counterexample)
        std::cout << "  first_counterexample=" << *rep.first_counterexample;
    if (!rep.exceptions.empty()) {
        std::cout << "  exceptions={";
        for (size_t i = 0; i < rep.exceptions.size() && i < 12; ++i) {
            if (i) std::cout << ',';
            std::cout << rep.exceptions[i];
        }
        if (rep.exceptions.size() > 12) std::cout << ",...";
        std::cout << '}';
    }
    std::cout << "  (" << rep.elapsed_ms << " ms)\n";
}

int report_exit(const std::vector<ScanReport>& reports) {
    for (const auto& r : reports)
        if (!r.exceptions.empty()) return 1;
    return 0;
}

std::filesystem::path resolve_checkpoint(const std::string& arg) {
    std::filesystem::path p(arg);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("OCTOFORM_CHECKPOINT_DIR"))
            return std::filesystem::path(dir) / p;
    }
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for sums of generalized polygonal numbers"};
    app.require_subcommand(1);

    // ---- decompose ----
    i64 dec_n = 0;
    auto* dec = app.add_subcommand("decompose",
                                   "write n as a sum of four generalized octagonal "
                                   "numbers, one of them odd");
    dec->add_option("n", dec_n, "target integer, n >= 1")->required();

    // ---- count ----
    i64 cnt_n = 0;
    auto* cnt = app.add_subcommand("count", "unordered representation counts r(n) and s(n)");
    cnt->add_option("n", cnt_n, "target integer, n >= 1")->required();

    // ---- scan-unique ----
    i64 su_bound = 10000;
    int su_threads = default_thread_count();
    std::string su_output;
    auto* su = app.add_subcommand("scan-unique", "list all n <= bound with r(n)=1 or s(n)=1");
    su->add_option("--bound", su_bound, "scan bound")->check(CLI::PositiveNumber);
    su->add_option("--threads", su_threads, "worker threads");
    su->add_option("--output,-o", su_output, "write JSON report here");

    // ---- universal ----
    std::string un_coeffs, un_domains, un_output, un_csv;
    i64 un_bound = 100000, un_order = 8;
    auto* un = app.add_subcommand("universal",
                                  "test whether a weighted polygonal sum covers every "
                                  "n <= bound");
    un->add_option("--coeffs", un_coeffs, "comma-separated weights, e.g. 1,2,4,8")->required();
    un->add_option("--bound", un_bound, "verification bound")->check(CLI::NonNegativeNumber);
    un->add_option("--domains", un_domains, "per-slot domains (z, n or n2)");
    un->add_option("--order", un_order, "polygonal order m (default 8)");
    un->add_option("--output,-o", un_output, "write JSON report here");
    un->add_option("--csv", un_csv, "dump the sieve as n,representable CSV");

    // ---- exceptional ----
    std::string ex_coeffs, ex_domains, ex_output, ex_csv;
    i64 ex_bound = 10000, ex_order = 8;
    auto* ex = app.add_subcommand("exceptional",
                                  "exceptional set of a weighted polygonal sum up to bound");
    ex->add_option("--coeffs", ex_coeffs, "comma-separated weights")->required();
    ex->add_option("--bound", ex_bound, "bound")->check(CLI::NonNegativeNumber);
    ex->add_option("--domains", ex_domains, "per-slot domains (z, n or n2)");
    ex->add_option("--order", ex_order, "polygonal order m (default 8)");
    ex->add_option("--output,-o", ex_output, "write JSON report here");
    ex->add_option("--csv", ex_csv, "dump the sieve as n,representable CSV");

    // ---- necessity-scan ----
    i64 ns_maxd = 14, ns_bound = 100;
    int ns_threads = default_thread_count();
    std::string ns_output;
    auto* ns = app.add_subcommand("necessity-scan",
                                  "coefficient quadruples a<=b<=c<=d surviving the sieve "
                                  "up to bound");
    ns->add_option("--max-d", ns_maxd, "largest coefficient")->check(CLI::PositiveNumber);
    ns->add_option("--bound", ns_bound, "elimination bound (>= 60)");
    ns->add_option("--threads", ns_threads, "worker threads");
    ns->add_option("--output,-o", ns_output, "write surviving quadruples as JSON");

    // ---- equiv43 ----
    std::string eq_coeffs;
    i64 eq_maxn = 500;
    auto* eq = app.add_subcommand("equiv43",
                                  "check n in Z(1,b,c,d) against the coprime-to-3 "
                                  "quadratic-form route for all n <= max-n");
    eq->add_option("--coeffs", eq_coeffs, "b,c,d")->required();
    eq->add_option("--max-n", eq_maxn, "largest n tested")->check(CLI::NonNegativeNumber);

    // ---- ternary-scan ----
    std::string ts_coeffs, ts_output, ts_csv;
    i64 ts_bound = 10000;
    auto* ts = app.add_subcommand("ternary-scan",
                                  "exceptional set of a*p8+b*p8+c*p8 over Z up to bound");
    ts->add_option("--coeffs", ts_coeffs, "a,b,c")->required();
    ts->add_option("--bound", ts_bound, "bound")->check(CLI::NonNegativeNumber);
    ts->add_option("--output,-o", ts_output, "write JSON report here");
    ts->add_option("--csv", ts_csv, "dump the sieve as n,representable CSV");

    // ---- conjecture ----
    std::string cj_which, cj_output, cj_checkpoint;
    i64 cj_bound = -1;
    int cj_threads = default_thread_count();
    bool cj_all_four = false;
    auto* cj = app.add_subcommand("conjecture", "run one conjecture battery");
    cj->add_option("selector", cj_which, "one of 5.1, 5.2, 5.3, 5.4, 1.1, 1.2, 3.1")
        ->required();
    cj->add_option("--bound", cj_bound, "override the default bound");
    cj->add_option("--threads", cj_threads, "worker threads");
    cj->add_option("--checkpoint", cj_checkpoint,
                   "checkpoint file for 5.1 (relative paths resolve under "
                   "OCTOFORM_CHECKPOINT_DIR)");
    cj->add_flag("--side-condition-all-four", cj_all_four,
                 "5.2 only: apply the not-all-even condition to all four slots");
    cj->add_option("--output,-o", cj_output, "write JSON report(s) here");

    // ---- heptagonal-check ----
    i64 hc_bound = 3500;
    std::string hc_output;
    auto* hc = app.add_subcommand("heptagonal-check",
                                  "verify every n <= bound is a sum of four generalized "
                                  "heptagonal numbers");
    hc->add_option("--bound", hc_bound, "bound (default 3500)");
    hc->add_option("--output,-o", hc_output, "write JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dec->parsed()) {
            DecompositionWitness w = decompose(dec_n);
            std::cout << dec_n << " = " << w.values[0];
            for (int i = 1; i < 4; ++i) std::cout << " + " << w.values[i];
            std::cout << "   (arguments";
            for (i64 t : w.indices) std::cout << ' ' << t;
            std::cout << ")\n";
            return 0;
        }
        if (cnt->parsed()) {
            std::cout << "r(" << cnt_n << ") = " << r_count(cnt_n) << "\n"
                      << "s(" << cnt_n << ") = " << s_count(cnt_n) << "\n";
            return 0;
        }
        if (su->parsed()) {
            StopWatch watch;
            UniqueScan scan = scan_unique(su_bound, su_threads);
            std::cout << "r(n)=1: ";
            for (i64 n : scan.r_unique) std::cout << n << ' ';
            std::cout << "\ns(n)=1: ";
            for (i64 n : scan.s_unique) std::cout << n << ' ';
            std::cout << '\n';
            if (!su_output.empty()) {
                ScanReport rep;
                rep.task = "scan-unique";
                rep.params["kind"] = "r=1 and s=1 lists";
                rep.bound = su_bound;
                rep.verified_upto = su_bound;
                rep.counts = std::map<std::string, i64>{
                    {"r_unique", static_cast<i64>(scan.r_unique.size())},
                    {"s_unique", static_cast<i64>(scan.s_unique.size())}};
                rep.elapsed_ms = watch.elapsed_ms();
                nlohmann::ordered_json j = rep.to_json();
                j["r_unique"] = scan.r_unique;
                j["s_unique"] = scan.s_unique;
                write_json(su_output, j);
            }
            return 0;
        }
        if (un->parsed()) {
            QuaternarySum sum(parse_coeffs(un_coeffs), parse_domains(un_domains), un_order);
            ScanReport rep = check_universal(sum, un_bound);
            print_report(rep);
            if (!un_csv.empty()) {
                std::ofstream os(un_csv);
                write_csv_sieve(os, representable_sieve(sum, un_bound));
            }
            emit_reports(un_output, {rep});
            return rep.exceptions.empty() ? 0 : 1;
        }
        if (ex->parsed()) {
            QuaternarySum sum(parse_coeffs(ex_coeffs), parse_domains(ex_domains), ex_order);
            StopWatch watch;
            Bitset bits = representable_sieve(sum, ex_bound);
            ScanReport rep;
            rep.task = "exceptional";
            rep.params["sum"] = sum.describe();
            rep.bound = ex_bound;
            rep.verified_upto = ex_bound;
            rep.set_exceptions(bits.zeros());
            rep.elapsed_ms = watch.elapsed_ms();
            std::cout << "exceptional set of " << sum.describe() << " up to " << ex_bound
                      << ": {";
            for (size_t i = 0; i < rep.exceptions.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << rep.exceptions[i];
            }
            std::cout << "}\n";
            if (!ex_csv.empty()) {
                std::ofstream os(ex_csv);
                write_csv_sieve(os, bits);
            }
            emit_reports(ex_output, {rep});
            return 0;
        }
        if (ns->parsed()) {
            auto survivors = necessity_scan(ns_maxd, ns_bound, ns_threads);
            std::cout << survivors.size() << " surviving quadruples:\n";
            for (const auto& q : survivors)
                std::cout << "  (" << q[0] << ',' << q[1] << ',' << q[2] << ',' << q[3]
                          << ")\n";
            if (!ns_output.empty()) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& q : survivors) arr.push_back(q);
                write_json(ns_output, arr);
            }
            return 0;
        }
        if (eq->parsed()) {
            auto bcd = parse_coeffs(eq_coeffs);
            if (bcd.size() != 3) throw CLI::ValidationError("--coeffs", "need exactly b,c,d");
            std::array<i64, 3> t{bcd[0], bcd[1], bcd[2]};
            i64 mismatches = 0;
            for (i64 n = 0; n <= eq_maxn; ++n) {
                auto [lhs, rhs] = equivalence_43(t, n);
                if (lhs != rhs) {
                    ++mismatches;
                    std::cout << "mismatch at n=" << n << ": membership=" << lhs
                              << " form-route=" << rhs << '\n';
                }
            }
            std::cout << "checked n=0.." << eq_maxn << ": " << mismatches << " mismatches\n";
            return mismatches == 0 ? 0 : 1;
        }
        if (ts->parsed()) {
            auto abc = parse_coeffs(ts_coeffs);
            if (abc.size() != 3) throw CLI::ValidationError("--coeffs", "need exactly a,b,c");
            ScanReport rep = ternary_scan({abc[0], abc[1], abc[2]}, ts_bound);
            print_report(rep);
            if (!ts_csv.empty()) {
                QuaternarySum sum({abc[0], abc[1], abc[2]});
                std::ofstream os(ts_csv);
                write_csv_sieve(os, representable_sieve(sum, ts_bound));
            }
            emit_reports(ts_output, {rep});
            return 0;
        }
        if (cj->parsed()) {
            std::vector<ScanReport> reports;
            if (cj_which == "5.1") {
                ScanOptions opts;
                opts.threads = cj_threads;
                if (!cj_checkpoint.empty())
                    opts.checkpoint_path = resolve_checkpoint(cj_checkpoint);
                reports.push_back(
                    pentagonal_prime_scan(cj_bound < 0 ? 10000000 : cj_bound, opts));
            } else if (cj_which == "5.2") {
                reports = run_conjecture_5_2(cj_bound < 0 ? 10000 : cj_bound, cj_all_four);
            } else if (cj_which == "5.3") {
                reports = run_conjecture_5_3(cj_bound < 0 ? 10000 : cj_bound);
            } else if (cj_which == "5.4") {
                reports = run_conjecture_5_4(cj_bound < 0 ? 10000 : cj_bound);
            } else if (cj_which == "1.1") {
                i64 b = cj_bound < 0 ? 100000 : cj_bound;
                reports = run_conjecture_1_1(b, std::min<i64>(b, 10000));
            } else if (cj_which == "1.2") {
                reports = run_conjecture_1_2(cj_bound < 0 ? 10000 : cj_bound);
            } else if (cj_which == "3.1") {
                reports = run_conjecture_3_1(cj_bound < 0 ? 10000 : cj_bound, cj_threads);
            } else {
                std::cerr << "unknown conjecture selector: " << cj_which << '\n';
                return 2;
            }
            for (const auto& r : reports) print_report(r);
            emit_reports(cj_output, reports);
            return report_exit(reports);
        }
        if (hc->parsed()) {
            ScanReport rep = heptagonal_four_sum_check(hc_bound);
            print_report(rep);
            emit_reports(hc_output, {rep});
            return rep.exceptions.empty() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
