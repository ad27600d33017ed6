#include <gtest/gtest.h>

#include "octoform/polygonal.hpp"

using namespace octoform;

TEST(PolygonalValue, KnownValues) {
    EXPECT_EQ(polygonal_value(8, 5), 65);
    EXPECT_EQ(polygonal_value(8, -4), 56);
    for (i64 m = 3; m <= 12; ++m) EXPECT_EQ(polygonal_value(m, 0), 0);
    EXPECT_EQ(polygonal_value(3, 3), 6);
    EXPECT_EQ(polygonal_value(4, 7), 49);
    EXPECT_EQ(polygonal_value(5, -2), 7);
    EXPECT_EQ(polygonal_value(6, 3), 15);
    EXPECT_EQ(polygonal_value(7, 2), 7);
}

TEST(PolygonalValue, RejectsBadOrder) {
    EXPECT_THROW(polygonal_value(2, 1), std::invalid_argument);
    EXPECT_THROW(polygonal_value(0, 1), std::invalid_argument);
}

TEST(PolygonalValue, OverflowReported) {
    EXPECT_THROW(polygonal_value(8, i64{3000000000}), std::overflow_error);
}

TEST(PolygonalValue, OctagonalParityMatchesArgument) {
    for (i64 x = -300; x <= 300; ++x)
        EXPECT_EQ(mod_floor(polygonal_value(8, x), 2), mod_floor(x, 2)) << x;
}

TEST(PolygonalValue, OddArgumentIdentity) {
    // p8(2x+1) = 4 p8(-x) + 1
    for (i64 x = -200; x <= 200; ++x)
        EXPECT_EQ(polygonal_value(8, 2 * x + 1), 4 * polygonal_value(8, -x) + 1) << x;
}

TEST(InvertPolygonal, KnownValues) {
    EXPECT_EQ(invert_polygonal(8, 21, Domain::AllIntegers), 3);
    EXPECT_EQ(invert_polygonal(8, 2, Domain::AllIntegers), std::nullopt);
    EXPECT_EQ(invert_polygonal(8, 0, Domain::Naturals), 0);
    // triangular 3 = p3(2) = p3(-3); the positive root wins
    EXPECT_EQ(invert_polygonal(3, 3, Domain::AllIntegers), 2);
    EXPECT_EQ(invert_polygonal(3, 3, Domain::SecondNaturals), -3);
}

TEST(InvertPolygonal, RoundTrip) {
    for (i64 m = 3; m <= 12; ++m) {
        for (i64 x = -60; x <= 60; ++x) {
            i64 v = polygonal_value(m, x);
            auto back = invert_polygonal(m, v, Domain::AllIntegers);
            ASSERT_TRUE(back.has_value()) << m << " " << x;
            EXPECT_EQ(polygonal_value(m, *back), v) << m << " " << x;
        }
    }
}

TEST(EnumerateValues, OctagonalListUpTo120) {
    std::vector<i64> expected = {0, 1, 5, 8, 16, 21, 33, 40, 56, 65, 85, 96, 120};
    EXPECT_EQ(enumerate_values(8, Domain::AllIntegers, 120), expected);
}

TEST(EnumerateValues, PentagonalUpTo12) {
    std::vector<i64> expected = {0, 1, 2, 5, 7, 12};
    EXPECT_EQ(enumerate_values(5, Domain::AllIntegers, 12), expected);
}

TEST(EnumerateValues, ZeroBound) {
    for (i64 m = 3; m <= 10; ++m) {
        std::vector<i64> expected = {0};
        EXPECT_EQ(enumerate_values(m, Domain::AllIntegers, 0), expected);
    }
}

TEST(EnumerateValues, HexagonalEqualsTriangular) {
    EXPECT_EQ(enumerate_values(6, Domain::AllIntegers, 100000),
              enumerate_values(3, Domain::Naturals, 100000));
}

TEST(EnumerateValues, DomainsPartitionAllIntegers) {
    for (i64 m : {3, 5, 7, 8}) {
        auto all = enumerate_values(m, Domain::AllIntegers, 5000);
        auto firsts = enumerate_values(m, Domain::Naturals, 5000);
        auto seconds = enumerate_values(m, Domain::SecondNaturals, 5000);
        std::vector<i64> merged(firsts);
        merged.insert(merged.end(), seconds.begin(), seconds.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        EXPECT_EQ(all, merged) << m;
    }
}

TEST(EnumerateValues, SortedAndDeduplicated) {
    auto vals = enumerate_values(8, Domain::AllIntegers, 100000);
    for (size_t i = 1; i < vals.size(); ++i) ASSERT_LT(vals[i - 1], vals[i]);
    EXPECT_EQ(vals.front(), 0);
    EXPECT_LE(vals.back(), 100000);
}
