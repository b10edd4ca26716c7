#include "hooklab/diagrams.hpp"

#include <gtest/gtest.h>

namespace hooklab {
namespace {

TEST(Excited, CountsForPinnedShapes) {
    EXPECT_EQ(excited_diagrams(SkewShape::parse("3,3,2/2,1")).size(), 5u);
    EXPECT_EQ(generalized_excited_diagrams(SkewShape::parse("3,3,2/2,1")).size(), 11u);
    EXPECT_EQ(excited_diagrams(SkewShape::parse("4,3/2")).size(), 3u);
    EXPECT_EQ(generalized_excited_diagrams(SkewShape::parse("4,3/2")).size(), 5u);
    EXPECT_EQ(generalized_excited_diagrams(SkewShape::parse("5,4,4,2/2,1")).size(), 27u);
}

TEST(Excited, EmptyInnerShapeHasUniqueDiagram) {
    for (const char* s : {"3,2", "4,4,2", "1"}) {
        auto e = generalized_excited_diagrams(SkewShape::parse(s));
        ASSERT_EQ(e.size(), 1u);
        EXPECT_TRUE(e[0].cells.empty());
    }
}

TEST(Excited, PeaksOfInitialDiagramAreEmpty) {
    SkewShape sh = SkewShape::parse("3,3,2/2,1");
    auto closure = excited_peaks(sh);
    std::vector<Cell> initial = SkewShape(sh.inner(), Partition()).cells();
    std::sort(initial.begin(), initial.end());
    bool found = false;
    for (const auto& [d, peaks] : closure)
        if (d.cells == initial) {
            EXPECT_TRUE(peaks.empty());
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(Excited, PeakCountsReproduceBothSums) {
    SkewShape sh = SkewShape::parse("3,3,2/2,1");
    long genSum = 0;
    for (const auto& [d, peaks] : excited_peaks(sh)) genSum += 1L << peaks.size();
    EXPECT_EQ(genSum, 11);
    EXPECT_EQ(pleasant_count_formula(sh), 88);
}

TEST(Excited, PeaksLieOutsideTheirDiagram) {
    for (const char* s : {"3,3,2/2,1", "4,3/2", "5,4,4,2/2,1", "3,2,1/1,1"}) {
        for (const auto& [d, peaks] : excited_peaks(SkewShape::parse(s)))
            for (Cell p : peaks) {
                EXPECT_TRUE(d.ambient.contains(p));
                EXPECT_FALSE(d.contains(p));
            }
    }
}

TEST(NoCharacterization, SmallShapes) {
    EXPECT_TRUE(check_no_characterization(SkewShape::parse("3,3,2/2,1")));
    EXPECT_TRUE(check_no_characterization(SkewShape::parse("2,2/2,2")));
    EXPECT_TRUE(check_no_characterization(SkewShape::parse("2,1/1")));
    EXPECT_TRUE(check_no_characterization(SkewShape::parse("5,4,4,2/2,1")));
}

TEST(Pleasant, CountsAndDegenerate) {
    EXPECT_EQ(pleasant_diagrams(SkewShape::parse("3,3,2/2,1")).size(), 88u);
    EXPECT_EQ(pleasant_diagrams(SkewShape::parse("2,1/2,1")).size(), 1u);
    auto p = pleasant_diagrams(SkewShape::parse("2,1/1"));
    EXPECT_EQ(static_cast<long>(p.size()), pleasant_count_formula(SkewShape::parse("2,1/1")));
}

TEST(Pleasant, MatchesFormulaOnSweep) {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : subdiagrams(lambda)) {
                SkewShape sh(lambda, mu);
                EXPECT_EQ(static_cast<long>(pleasant_diagrams(sh).size()), pleasant_count_formula(sh))
                    << sh.str();
            }
}

TEST(LatticeCounts, DelannoyAndSchroeder) {
    EXPECT_EQ(delannoy_count(0, 5), 1);
    EXPECT_EQ(delannoy_count(5, 0), 1);
    EXPECT_EQ(delannoy_count(1, 1), 3);
    EXPECT_EQ(delannoy_count(2, 2), 13);
    long long schr[] = {1, 3, 11, 45, 197, 903, 4279, 20793, 103049};
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(schroeder(n), schr[n - 1]);
}

TEST(LatticeCounts, EtaInsideShape) {
    Partition lambda({5, 4, 4, 2});
    EXPECT_EQ(eta({3, 1}, {1, 3}, lambda), 13);
    EXPECT_EQ(eta({3, 1}, {2, 4}, lambda), 7);
    EXPECT_EQ(eta({3, 3}, {1, 3}, lambda), 1);
    EXPECT_EQ(eta({3, 3}, {2, 4}, lambda), 3);
    EXPECT_EQ(eta({2, 2}, {2, 2}, lambda), 1);
    // unconstrained box reproduces plain Delannoy numbers
    Partition big({9, 9, 9, 9, 9});
    EXPECT_EQ(eta({5, 1}, {1, 5}, big), delannoy_count(4, 4));
}

TEST(LatticeCounts, EtaBetaCountsDiagonals) {
    Partition lambda({2, 2});
    UniPoly<Rational> p = eta_beta({2, 1}, {1, 2}, lambda);
    // RU, UR and the single diagonal
    EXPECT_EQ(p.coefficient(0), Rational(2));
    EXPECT_EQ(p.coefficient(1), Rational(1));
    EXPECT_EQ(p(Rational(1)), Rational(static_cast<long>(eta({2, 1}, {1, 2}, lambda))));
    EXPECT_EQ(eta_beta_at({2, 1}, {1, 2}, lambda, make_rational(1, 2)), make_rational(5, 2));
}

TEST(DyckPolys, HighPeakPolynomials) {
    EXPECT_EQ(dyck_high_peak_poly(1), UniPoly<Rational>(1));
    UniPoly<Rational> l2({std::vector<Rational>{1, 1}});
    EXPECT_EQ(dyck_high_peak_poly(2), l2);
    UniPoly<Rational> l3({std::vector<Rational>{1, 3, 1}});
    EXPECT_EQ(dyck_high_peak_poly(3), l3);
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(dyck_high_peak_poly(n)(Rational(2)), Rational(static_cast<long>(schroeder(n))));
}

TEST(Excited, ClosureIndependentOfWorklistOrder) {
    // breadth-first and depth-first exploration reach the same diagram sets
    auto bfs_closure = [](const SkewShape& sh) {
        const Partition& lambda = sh.outer();
        std::set<std::vector<Cell>> seen;
        std::vector<std::vector<Cell>> queue{detail::initial_cells(sh)};
        seen.insert(queue[0]);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::vector<Cell> S = queue[head];
            for (Cell u : S) {
                if (!detail::is_active(lambda, S, u)) continue;
                Cell target{u.row + 1, u.col + 1};
                for (bool keep : {false, true}) {
                    auto S2 = keep ? detail::with_cell(S, target)
                                   : detail::with_cell(detail::without_cell(S, u), target);
                    if (seen.insert(S2).second) queue.push_back(std::move(S2));
                }
            }
        }
        return seen;
    };
    for (const char* s : {"3,3,2/2,1", "5,4,4,2/2,1", "4,3/2", "3,2,1/1"}) {
        SkewShape sh = SkewShape::parse(s);
        auto viaBfs = bfs_closure(sh);
        auto viaDfs = generalized_excited_diagrams(sh);
        ASSERT_EQ(viaBfs.size(), viaDfs.size()) << s;
        for (const Diagram& d : viaDfs) EXPECT_TRUE(viaBfs.count(d.cells)) << s;
    }
}

TEST(Excited, CountSandwich) {
    // |E| <= |D| <= 2^{|lambda/mu|} |E|
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : subdiagrams(lambda)) {
                SkewShape sh(lambda, mu);
                long e = static_cast<long>(excited_diagrams(sh).size());
                long d = static_cast<long>(generalized_excited_diagrams(sh).size());
                EXPECT_LE(e, d) << sh.str();
                EXPECT_LE(d, (1L << sh.size()) * e) << sh.str();
            }
}

TEST(ThickZigzag, SmallCases) {
    for (int n = 1; n <= 4; ++n) {
        auto rep = thick_zigzag(n, 1);
        EXPECT_EQ(rep.direct_count, schroeder(n)) << n;
        EXPECT_EQ(rep.det_value, rep.direct_count);
        EXPECT_EQ(rep.tuple_poly(Rational(2)), Rational(static_cast<long>(rep.direct_count)));
    }
    auto rep = thick_zigzag(1, 2);
    EXPECT_EQ(rep.direct_count, 1);  // D(delta_5/delta_1) = { empty }
    EXPECT_EQ(rep.det_value, (schroeder(1) * schroeder(3) - schroeder(2) * schroeder(2)) / 2);
    EXPECT_EQ(rep.det_value, rep.direct_count);
    auto rep2 = thick_zigzag(2, 2);
    EXPECT_EQ(rep2.det_value, (schroeder(2) * schroeder(4) - schroeder(3) * schroeder(3)) / 2);
    EXPECT_EQ(rep2.direct_count, rep2.det_value);
}

}  // namespace
}  // namespace hooklab
