#include <gtest/gtest.h>

#include <sstream>

#include "octoform/report.hpp"
#include "octoform/universality.hpp"

using namespace octoform;

TEST(ScanReport, JsonRoundTrip) {
    ScanReport rep;
    rep.task = "universal";
    rep.params["sum"] = "p8+2*p8+4*p8+8*p8";
    rep.bound = 1000;
    rep.set_exceptions({7, 14});
    rep.counts = std::map<std::string, i64>{{"observed_exceptions", 2}};
    rep.verified_upto = 1000;
    rep.elapsed_ms = 42;

    ScanReport back = ScanReport::from_json(rep.to_json());
    EXPECT_TRUE(back.same_outcome(rep));
    EXPECT_EQ(back.elapsed_ms, rep.elapsed_ms);
    EXPECT_EQ(back.first_counterexample, 7);
}

TEST(ScanReport, NullFieldsRoundTrip) {
    ScanReport rep;
    rep.task = "universal";
    rep.bound = 10;
    rep.set_exceptions({});
    auto j = rep.to_json();
    EXPECT_TRUE(j.at("first_counterexample").is_null());
    EXPECT_TRUE(j.at("counts").is_null());
    ScanReport back = ScanReport::from_json(j);
    EXPECT_TRUE(back.same_outcome(rep));
}

TEST(ScanReport, SchemaKeyOrderStable) {
    ScanReport rep;
    rep.task = "t";
    auto j = rep.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"task", "params", "bound", "verdict",
                                              "exceptions", "first_counterexample",
                                              "counts", "verified_upto", "elapsed_ms"}));
}

TEST(ScanReport, IdenticalRunsSerializeIdentically) {
    ScanReport a = check_universal(QuaternarySum({1, 1, 3}), 500);
    ScanReport b = check_universal(QuaternarySum({1, 1, 3}), 500);
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    EXPECT_EQ(a.to_json().dump(2), b.to_json().dump(2));
}

TEST(ScanReport, VerdictTracksExceptions) {
    ScanReport rep;
    rep.set_exceptions({});
    EXPECT_EQ(rep.verdict, Verdict::UniversalUpToBound);
    rep.set_exceptions({3, 9});
    EXPECT_EQ(rep.verdict, Verdict::Counterexample);
    EXPECT_EQ(rep.first_counterexample, 3);
}

TEST(Csv, SieveDumpFormat) {
    Bitset bits(4);
    bits.set(0);
    bits.set(2);
    std::ostringstream os;
    write_csv_sieve(os, bits);
    EXPECT_EQ(os.str(), "n,representable\n0,1\n1,0\n2,1\n3,0\n");
}

TEST(Verdict, StringRoundTrip) {
    EXPECT_EQ(verdict_from_string(to_string(Verdict::UniversalUpToBound)),
              Verdict::UniversalUpToBound);
    EXPECT_EQ(verdict_from_string(to_string(Verdict::Counterexample)),
              Verdict::Counterexample);
    EXPECT_THROW(verdict_from_string("nope"), std::invalid_argument);
}
