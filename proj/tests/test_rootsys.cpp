#include <gtest/gtest.h>

#include <random>
#include <set>

#include <kostant/g2/rootsys.hpp>

#include "fixtures.hpp"

namespace g2 = kostant::g2;
using kostant::FundCoord;
using kostant::Mat2;
using kostant::RootCoord;

namespace {

using fixtures::shift_rows;

Mat2 power(const Mat2& a, int k) {
    Mat2 out = kostant::identity2;
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

}  // namespace

TEST(RootSystem, FundamentalToRoot) {
    EXPECT_EQ(g2::fund_to_root(FundCoord{0, 1}), (RootCoord{3, 2}));
    EXPECT_EQ(g2::fund_to_root(FundCoord{0, 0}), (RootCoord{0, 0}));
    EXPECT_EQ(g2::fund_to_root(FundCoord{1, 1}), (RootCoord{5, 3}));
    EXPECT_EQ(g2::fund_to_root(FundCoord{1, 0}), (RootCoord{2, 1}));
    EXPECT_EQ(g2::constants.rho, g2::fund_to_root(FundCoord{1, 1}));
    for (std::int64_t m = 0; m <= 10; ++m)
        for (std::int64_t n = 0; n <= 10; ++n)
            ASSERT_EQ(g2::root_to_fund(g2::fund_to_root(FundCoord{m, n})), (RootCoord{m, n}));
}

TEST(RootSystem, NegativeFundamentalCoordinatesRejected) {
    EXPECT_THROW(FundCoord(-1, 0), std::invalid_argument);
    EXPECT_THROW(FundCoord(0, -3), std::invalid_argument);
}

TEST(RootSystem, CartanMatrix) {
    const Mat2 c = kostant::cartan_from_reflections(g2::s1_matrix, g2::s2_matrix);
    EXPECT_EQ(c, (Mat2{{{2, -3}, {-1, 2}}}));
    EXPECT_EQ(kostant::det(c), 1);
}

TEST(RootSystem, CoxeterRelations) {
    EXPECT_EQ(g2::s1_matrix * g2::s1_matrix, kostant::identity2);
    EXPECT_EQ(g2::s2_matrix * g2::s2_matrix, kostant::identity2);
    const Mat2 c = g2::s1_matrix * g2::s2_matrix;
    EXPECT_EQ(power(c, 6), kostant::identity2);
    for (int k = 1; k < 6; ++k) EXPECT_NE(power(c, k), kostant::identity2) << k;
}

TEST(RootSystem, GroupHasTwelveDistinctElements) {
    const auto& group = g2::weyl_group();
    ASSERT_EQ(group.size(), 12u);
    std::set<Mat2> distinct;
    for (const auto& w : group) distinct.insert(w.matrix);
    EXPECT_EQ(distinct.size(), 12u);
    EXPECT_EQ(group.front().matrix, kostant::identity2);
    EXPECT_EQ(group.front().length, 0);
    EXPECT_EQ(group.back().word, (std::vector<int>{1, 2, 1, 2, 1, 2}));
}

TEST(RootSystem, DeterminantIsSign) {
    for (const auto& w : g2::weyl_group()) EXPECT_EQ(kostant::det(w.matrix), w.sign()) << kostant::word_string(w.word);
}

TEST(RootSystem, WordsMultiplyOut) {
    for (const auto& w : g2::weyl_group()) {
        Mat2 prod = kostant::identity2;
        for (int g : w.word) prod = prod * (g == 1 ? g2::s1_matrix : g2::s2_matrix);
        EXPECT_EQ(prod, w.matrix) << kostant::word_string(w.word);
        EXPECT_EQ(static_cast<std::size_t>(w.length), w.word.size());
    }
}

TEST(RootSystem, ClosedUnderComposition) {
    std::set<Mat2> members;
    for (const auto& w : g2::weyl_group()) members.insert(w.matrix);
    for (const auto& a : g2::weyl_group())
        for (const auto& b : g2::weyl_group()) ASSERT_TRUE(members.contains(a.matrix * b.matrix));
}

TEST(RootSystem, MatchesTabulatedImages) {
    for (const auto& t : g2::tabulated_elements()) {
        const auto& w = g2::element(t.word);
        EXPECT_EQ(w.length, t.length) << t.name;
        EXPECT_EQ(kostant::image_of_alpha1(w.matrix), t.image_a1) << t.name;
        EXPECT_EQ(kostant::image_of_alpha2(w.matrix), t.image_a2) << t.name;
        EXPECT_EQ(kostant::compact_word(t.word), t.name);
    }
    EXPECT_EQ(g2::element({2, 1}).apply(RootCoord{1, 0}), (RootCoord{-1, -1}));
    EXPECT_EQ(g2::element({1, 2, 1, 2, 1, 2}).apply(RootCoord{0, 1}), (RootCoord{0, -1}));
    EXPECT_THROW(g2::element({1, 1}), std::invalid_argument);
}

TEST(RootSystem, PositiveRootsRecoveredFromGroup) {
    const auto roots = kostant::positive_roots_from_group(g2::weyl_group());
    std::vector<RootCoord> expected(g2::constants.positive_roots.begin(), g2::constants.positive_roots.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(roots, expected);
    RootCoord sum{};
    for (auto r : g2::constants.positive_roots) sum = sum + r;
    EXPECT_EQ(sum, (RootCoord{10, 6}));  // 2 rho
}

TEST(SigmaShift, Examples) {
    const FundCoord zero{0, 0};
    EXPECT_EQ(g2::sigma_shift(g2::element({}), FundCoord{4, 2}, FundCoord{4, 2}), (RootCoord{0, 0}));
    EXPECT_EQ(g2::sigma_shift(g2::element({1, 2, 1, 2, 1, 2}), zero, zero), (RootCoord{-10, -6}));
}

TEST(SigmaShift, AffineRowsOnRandomTuples) {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<std::int64_t> coord(0, 20);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t m = coord(rng), n = coord(rng), x = coord(rng), y = coord(rng);
        for (const auto& row : shift_rows()) {
            const auto& sigma = g2::element(row.word);
            ASSERT_EQ(sigma.length, row.length);
            ASSERT_EQ(g2::sigma_shift(sigma, {m, n}, {x, y}), row.expected(m, n, x, y))
                << kostant::compact_word(row.word) << " at " << m << ',' << n << ',' << x << ',' << y;
        }
    }
}

TEST(SigmaShift, OnlyFiveElementsCanContribute) {
    const std::set<std::vector<int>> contributing{{}, {1}, {2}, {2, 1}, {1, 2}};
    for (std::int64_t m = 0; m <= 8; ++m)
        for (std::int64_t n = 0; n <= 8; ++n)
            for (std::int64_t x = 0; x <= 8; ++x)
                for (std::int64_t y = 0; y <= 8; ++y)
                    for (const auto& w : g2::weyl_group()) {
                        if (contributing.contains(w.word)) continue;
                        ASSERT_FALSE(g2::sigma_shift(w, {m, n}, {x, y}).nonnegative())
                            << kostant::compact_word(w.word);
                    }
}
