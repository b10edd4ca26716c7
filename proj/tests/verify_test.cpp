#include "hooklab/verify.hpp"

#include <gtest/gtest.h>

#include "hooklab/sweep.hpp"

namespace hooklab {
namespace {

using Poly = UniPoly<Rational>;
using RF = RatFunc<Rational>;

TEST(VerifyHlf, SmallShapes) {
    for (const char* s : {"2,2", "1", "3,2,1", "4,2"}) {
        auto rep = verify_hlf(Partition::parse(s));
        EXPECT_TRUE(rep.pass) << s;
    }
    EXPECT_EQ(verify_hlf(Partition({2, 2})).lhs, "2");
}

TEST(VerifyQhlf, GeometricSeriesForSingleBox) {
    auto rep = verify_qhlf(Partition({1}), 5);
    EXPECT_TRUE(rep.pass);
    // 1/(1-q): all-ones coefficients
    EXPECT_NE(rep.rhs.find("1*q^5"), std::string::npos);
    EXPECT_TRUE(verify_qhlf(Partition({2, 2}), 20).pass);
}

TEST(VerifyItRpp, StraightShapes) {
    for (const char* s : {"1", "2,1", "2,2", "3,1"})
        EXPECT_TRUE(verify_it_rpp(Partition::parse(s), 20).pass) << s;
}

TEST(VerifyKhlf, ExactInBeta) {
    for (const char* s : {"1", "2", "2,2", "3,1", "2,1,1"}) {
        Partition lambda = Partition::parse(s);
        for (int d = lambda.length(); d <= lambda.length() + 2; ++d)
            EXPECT_TRUE(verify_khlf(lambda, std::max(1, d)).pass) << s << " d=" << d;
    }
}

TEST(VerifyKhlf, SingleBoxClosedForm) {
    auto rep = verify_khlf(Partition({1}), 1);
    EXPECT_TRUE(rep.pass);
    // -(1+2b)/b on both sides
    EXPECT_EQ(rep.lhs, rep.rhs);
}

TEST(VerifyQkhlfCor, TwoByTwo) {
    auto rep = verify_qkhlf_cor(Partition({2, 2}));
    EXPECT_TRUE(rep.pass);
    // q^8 / ((1-q)(1-q^2)^2(1-q^3)), s(2,2) = 8
    RF expect(Poly::monomial(Rational(1), 8));
    for (int h : {1, 2, 2, 3}) expect = expect / RF(Poly(1) - Poly::monomial(Rational(1), h));
    RF lhs = sit_q_sum(SkewShape(Partition({2, 2}), Partition()));
    EXPECT_EQ(lhs, expect);
}

TEST(VerifyKhlfMultivariate, RandomPoints) {
    EXPECT_TRUE(verify_khlf_multivariate(Partition({2, 2}), 2, 6, 99).pass);
    EXPECT_TRUE(verify_khlf_multivariate(Partition({3, 1}), 3, 6, 100).pass);
    auto rep = verify_khlf_multivariate(Partition({2, 1}), 2, 20, 101);
    EXPECT_TRUE(rep.pass);
    // reported failure bound below 1e-6
    Rational bound = parse_rational(rep.error_bound);
    EXPECT_LT(bound, make_rational(1, 1000000));
}

TEST(VerifyInfiniteKhlf, ConvergentRegime) {
    // single box: geometric series with ratio 2/3 at beta = -1/4 sums to 2
    auto rep = verify_infinite_khlf(Partition({1}), 1, make_rational(-1, 4), 60,
                                    make_rational(1, 1000000));
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.rhs, "2");
    auto rep2 = verify_infinite_khlf(Partition({2, 1}), 2, make_rational(-1, 6), 300,
                                     make_rational(1, 100000000));
    EXPECT_TRUE(rep2.pass);
}

TEST(VerifyInfiniteKhlf, DivergentRegimeUnsupported) {
    auto rep = verify_infinite_khlf(Partition({1}), 1, Rational(1), 50, make_rational(1, 1000000));
    EXPECT_FALSE(rep.pass);
    EXPECT_NE(rep.note.find("unsupported"), std::string::npos);
    auto rep2 = verify_infinite_khlf(Partition({2}), 1, Rational(-1), 50, make_rational(1, 1000000));
    EXPECT_FALSE(rep2.pass);  // 1 + beta*(lambda_1 + d) <= 0
}

TEST(VerifyQkhlf, SmallShapes) {
    for (const char* s : {"1", "2,1", "2,2"}) {
        Partition lambda = Partition::parse(s);
        EXPECT_TRUE(verify_qkhlf(lambda, std::max(1, lambda.length()), 1234).pass) << s;
    }
}

TEST(VerifyBetaCoefficients, SmallShapesSeveralD) {
    for (const char* s : {"1", "2", "1,1", "2,1", "2,2", "3,1"}) {
        Partition lambda = Partition::parse(s);
        for (int d = std::max(1, lambda.length()); d <= lambda.length() + 2; ++d)
            EXPECT_TRUE(verify_beta_coefficients(lambda, std::max(1, d)).pass) << s << " d=" << d;
    }
}

TEST(VerifyNhlf, PinnedShapes) {
    EXPECT_TRUE(verify_nhlf(SkewShape::parse("3,3,2/2,1")).pass);
    EXPECT_TRUE(verify_nhlf(SkewShape::parse("4,4,2/2,1")).pass);
    EXPECT_TRUE(verify_nhlf(SkewShape::parse("2,2")).pass);  // reduces to HLF
    EXPECT_TRUE(verify_nhlf(SkewShape::parse("3,2/3,2")).pass);
}

TEST(VerifyQnhlf, SmallShapes) {
    for (const char* s : {"2,1/1", "3,3,2/2,1", "2,2/1", "3,1"})
        EXPECT_TRUE(verify_qnhlf(SkewShape::parse(s), 16).pass) << s;
}

TEST(VerifyRpp, FormulasAndReciprocity) {
    auto rep = verify_rpp_formulas(SkewShape::parse("3,3,2/2,1"), 15);
    EXPECT_TRUE(rep.pass);
    EXPECT_TRUE(verify_rpp_formulas(SkewShape::parse("2,2/2,2"), 10).pass);
    EXPECT_TRUE(verify_rpp_formulas(SkewShape::parse("2,1/1"), 15).pass);
    // straight shapes: I(q) = q^s/prod(1-q^h) and R(1/q) picks up q^{sum h} = q^s, so N = 0
    auto repStraight = verify_rpp_formulas(SkewShape::parse("2,2"), 15);
    EXPECT_TRUE(repStraight.pass);
    EXPECT_NE(repStraight.note.find("N = 0"), std::string::npos);
}

TEST(VerifyKnhlf, PinnedAndDegenerate) {
    EXPECT_TRUE(verify_knhlf(SkewShape::parse("4,3/2"), 2).pass);
    EXPECT_TRUE(verify_knhlf(SkewShape::parse("3,3,2/2,1"), 3).pass);
    EXPECT_TRUE(verify_knhlf(SkewShape::parse("2,2/2,2"), 2).pass);
    // mu = 0 agrees with the straight-shape verifier
    auto skew = verify_knhlf(SkewShape::parse("2,2"), 2);
    auto straight = verify_khlf(Partition({2, 2}), 2);
    EXPECT_TRUE(skew.pass);
    EXPECT_EQ(skew.lhs, straight.lhs);
}

TEST(VerifySkewQ, PinnedShapes) {
    EXPECT_TRUE(verify_skew_q(SkewShape::parse("2,2/1")).pass);
    EXPECT_TRUE(verify_skew_q(SkewShape::parse("3,3,2/2,1")).pass);
    EXPECT_TRUE(verify_skew_q(SkewShape::parse("4,3/2")).pass);
    EXPECT_TRUE(verify_skew_q(SkewShape::parse("1")).pass);
}

TEST(VerifySkewChevalley, SmallShapes) {
    EXPECT_TRUE(verify_skew_chevalley(SkewShape::parse("2,2/1"), 2, 4, 7).pass);
    EXPECT_TRUE(verify_skew_chevalley(SkewShape::parse("2,2/2,2"), 2, 3, 8).pass);
    EXPECT_TRUE(verify_skew_chevalley(SkewShape::parse("3,1/1"), 2, 4, 9).pass);
}

TEST(VerifyKnhlfMultivariate, SmallShapes) {
    EXPECT_TRUE(verify_knhlf_multivariate(SkewShape::parse("2,2/1"), 2, 6, 11).pass);
    EXPECT_TRUE(verify_knhlf_multivariate(SkewShape::parse("3,2/2,2"), 2, 6, 12).pass);
    EXPECT_TRUE(verify_knhlf_multivariate(SkewShape::parse("2,1/2,1"), 2, 4, 13).pass);
}

TEST(VerifyQknhlf, SmallShapes) {
    EXPECT_TRUE(verify_qknhlf(SkewShape::parse("2,2/1"), 2, 6, 21).pass);
    EXPECT_TRUE(verify_qknhlf(SkewShape::parse("3,1/2"), 2, 6, 22).pass);
}

TEST(VerifyOof, SmallShapes) {
    EXPECT_TRUE(verify_oof(SkewShape::parse("2,1/1"), 2).pass);
    EXPECT_TRUE(verify_oof(SkewShape::parse("3,3,2/2,1"), 3).pass);
    EXPECT_TRUE(verify_oof(SkewShape::parse("2,2"), 2).pass);  // SSYT_d(empty) = {empty}
    EXPECT_TRUE(verify_oof(SkewShape::parse("4,4,2/2,1"), 3).pass);
}

TEST(VerifyKoof, SharesLhsWithKnhlf) {
    auto koof = verify_koof(SkewShape::parse("3,3,2/2,1"), 3);
    EXPECT_TRUE(koof.pass);
    auto knhlf = verify_knhlf(SkewShape::parse("3,3,2/2,1"), 3);
    EXPECT_EQ(koof.lhs, knhlf.lhs);
    EXPECT_TRUE(verify_koof(SkewShape::parse("2,2/1"), 2).pass);
    EXPECT_TRUE(verify_koof(SkewShape::parse("3,1"), 2).pass);
}

TEST(VerifyVanishing, BothBranches) {
    EXPECT_TRUE(verify_vanishing(Partition({2}), Partition({1}), 2, 6, 31).pass);
    EXPECT_TRUE(verify_vanishing(Partition({2, 2}), Partition({2, 2}), 2, 6, 32).pass);
    EXPECT_TRUE(verify_vanishing(Partition({1, 1, 1}), Partition({3}), 3, 6, 33).pass);
    EXPECT_THROW(verify_vanishing(Partition({1}), Partition({2, 1}), 2, 4, 34),
                 std::invalid_argument);
}

TEST(VerifyPieri, SmallShapes) {
    EXPECT_TRUE(verify_pieri(Partition(), 1, 4, 41).pass);
    EXPECT_TRUE(verify_pieri(Partition({2, 1}), 3, 4, 42).pass);
    EXPECT_TRUE(verify_pieri(Partition({2, 2}), 2, 4, 43).pass);
}

TEST(VerifyGProperties, SmallShapes) {
    EXPECT_TRUE(verify_g_properties(Partition({2, 1}), 2, 4, 51).pass);
    EXPECT_TRUE(verify_g_properties(Partition(), 2, 3, 52).pass);
    EXPECT_TRUE(verify_g_properties(Partition({3}), 3, 3, 53).pass);
}

TEST(Sweep, ParallelMatchesSerial) {
    SweepOptions serial{.max_size = 3, .identities = {}, .seed = 5, .trials = 4, .truncation = 10,
                        .threads = 1};
    SweepOptions parallel = serial;
    parallel.threads = 4;
    auto a = run_sweep(serial);
    auto b = run_sweep(parallel);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].identity, b[i].identity);
        EXPECT_EQ(a[i].shape, b[i].shape);
        EXPECT_EQ(a[i].lhs, b[i].lhs);
        EXPECT_EQ(a[i].rhs, b[i].rhs);
        EXPECT_EQ(a[i].pass, b[i].pass);
        EXPECT_EQ(a[i].seed, b[i].seed);
        EXPECT_TRUE(a[i].pass) << a[i].identity << " " << a[i].shape;
    }
}

TEST(Sweep, IdentityFilter) {
    SweepOptions opt{.max_size = 2, .identities = {"hlf", "nhlf"}, .seed = 1, .trials = 2,
                     .truncation = 8, .threads = 1};
    auto reports = run_sweep(opt);
    EXPECT_FALSE(reports.empty());
    for (const auto& r : reports) EXPECT_TRUE(r.identity == "hlf" || r.identity == "nhlf");
}

}  // namespace
}  // namespace hooklab
