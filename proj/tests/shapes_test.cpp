#include "hooklab/shapes.hpp"

#include <gtest/gtest.h>

namespace hooklab {
namespace {

TEST(Partition, ConjugateExamples) {
    EXPECT_EQ(Partition({4, 4, 2}).conjugate(), Partition({3, 3, 2, 2}));
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({1, 1, 1}).conjugate(), Partition({3}));
}

TEST(Partition, ConjugateIsAnInvolution) {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) EXPECT_EQ(p.conjugate().conjugate(), p);
}

TEST(Partition, HookExamples) {
    Partition p({2, 2});
    EXPECT_EQ(p.hook({1, 1}), 3);
    EXPECT_EQ(p.hook({1, 2}), 2);
    EXPECT_EQ(p.hook({2, 1}), 2);
    EXPECT_EQ(p.hook({2, 2}), 1);
    EXPECT_EQ(Partition({1}).hook({1, 1}), 1);
    EXPECT_EQ(Partition({4, 4, 2}).hook({1, 1}), 6);
    EXPECT_THROW(p.hook({3, 1}), std::invalid_argument);
}

TEST(Partition, HookSumEqualsSStat) {
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) {
            long acc = 0;
            for (Cell u : p.cells()) acc += p.hook(u);
            EXPECT_EQ(acc, p.s_stat());
        }
}

TEST(Partition, Stats) {
    EXPECT_EQ(Partition({4, 4, 2}).b_stat(), 8);
    EXPECT_EQ(Partition({4, 4, 2}).s_stat(), 31);
    EXPECT_EQ(Partition().b_stat(), 0);
    EXPECT_EQ(Partition().s_stat(), 0);
    EXPECT_EQ(Partition({2, 2}).b_stat(), 2);
    EXPECT_EQ(Partition({2, 2}).s_stat(), 8);  // = b + b' + |lambda| = sum of hooks
}

TEST(Partition, Staircases) {
    EXPECT_EQ(staircase(4), Partition({3, 2, 1}));
    EXPECT_EQ(staircase(1), Partition());
    EXPECT_EQ(staircase(0), Partition());
    EXPECT_EQ(staircase_long(2), Partition({3, 2, 1}));
}

TEST(Partition, CoversRookStrip) {
    EXPECT_TRUE(covers_rc(Partition({2, 1}), Partition({1})));
    EXPECT_FALSE(covers_rc(Partition({2}), Partition()));
    EXPECT_FALSE(covers_rc(Partition({1}), Partition({1})));
    EXPECT_FALSE(covers_rc(Partition({2, 2}), Partition({1, 1})));  // (1,2),(2,2) share a column
    EXPECT_TRUE(covers_rc(Partition({2, 1}), Partition({1, 1})));
    EXPECT_TRUE(covers_rc(Partition({3, 2}), Partition({2, 1})));
}

TEST(Partition, CoversMatchesBruteForce) {
    // covers_rc(nu, mu) iff nu/mu is a nonempty antichain in rows and columns
    auto brute = [](const Partition& nu, const Partition& mu) {
        if (!nu.contains(mu) || nu == mu) return false;
        std::vector<Cell> diff;
        for (Cell u : nu.cells())
            if (!mu.contains(u)) diff.push_back(u);
        for (std::size_t a = 0; a < diff.size(); ++a)
            for (std::size_t b = a + 1; b < diff.size(); ++b)
                if (diff[a].row == diff[b].row || diff[a].col == diff[b].col) return false;
        return true;
    };
    auto all = partitions_up_to(6);
    for (const Partition& nu : all)
        for (const Partition& mu : all) EXPECT_EQ(covers_rc(nu, mu), brute(nu, mu)) << nu.str() << " / " << mu.str();
}

TEST(Partition, RookStripExtensionsMatchCovers) {
    Partition bound({5, 5, 5, 5});
    for (const Partition& mu : partitions_up_to(5)) {
        auto exts = rook_strip_extensions(mu, bound);
        for (const Partition& nu : exts) EXPECT_TRUE(covers_rc(nu, mu));
        // every cover inside the bound appears
        for (const Partition& nu : partitions_up_to(7))
            if (bound.contains(nu) && covers_rc(nu, mu))
                EXPECT_NE(std::find(exts.begin(), exts.end(), nu), exts.end());
    }
}

TEST(SkewShape, ParseAndCells) {
    SkewShape sh = SkewShape::parse("4,4,2/2,1");
    EXPECT_EQ(sh.size(), 7);
    EXPECT_EQ(sh.str(), "4,4,2/2,1");
    EXPECT_TRUE(sh.contains({1, 3}));
    EXPECT_FALSE(sh.contains({1, 2}));
    EXPECT_EQ(SkewShape::parse("3,1").size(), 4);
    EXPECT_EQ(Partition::parse("0"), Partition());
    EXPECT_THROW(SkewShape::parse("1,1/2"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
}

TEST(Shapes, SubdiagramCount) {
    // subdiagrams of a rectangle a x b are the partitions in the box
    EXPECT_EQ(subdiagrams(Partition({2, 2})).size(), 6u);  // binom(4,2)
    EXPECT_EQ(subdiagrams(Partition({1})).size(), 2u);
    EXPECT_EQ(subdiagrams(Partition()).size(), 1u);
}

}  // namespace
}  // namespace hooklab
