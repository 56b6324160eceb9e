#include <qconvex/circleseq.hpp>
#include <qconvex/rng.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

using namespace qconvex;

TEST(DivChain, Validation) {
    EXPECT_NO_THROW(DivChain({Integer(1), Integer(3), Integer(6)}));
    EXPECT_THROW(DivChain({}), std::invalid_argument);
    EXPECT_THROW(DivChain({Integer(0)}), std::invalid_argument);
    EXPECT_THROW(DivChain({Integer(4), Integer(6)}), std::invalid_argument);  // 4 does not divide 6
    EXPECT_THROW(DivChain({Integer(4), Integer(4)}), std::invalid_argument);  // not strictly increasing
    DivChain c({Integer(8), Integer(64)});
    EXPECT_EQ(c.d(-1), Integer(1));
    EXPECT_EQ(c.d(1), Integer(64));
    EXPECT_EQ(c.ratio(1), Integer(8));
}

TEST(QSeq, DerivedQuantities) {
    QSeq Q({8, 8, 8});
    EXPECT_EQ(Q.depth(), 2u);
    EXPECT_EQ(Q.b(-1), Integer(1));
    EXPECT_EQ(Q.b(2), Integer(512));
    EXPECT_EQ(Q.X().size(), 7u); // 0 and three symmetric pairs
    EXPECT_THROW(QSeq({}), std::invalid_argument);
    EXPECT_THROW(QSeq({0}), std::invalid_argument);

    QSeq twos({2, 2});
    EXPECT_EQ(twos.X().size(), 4u); // 1/2 == -1/2, so one pair collapses
}

TEST(QSeq, EtaIsPreviousModulus) {
    QSeq Q({8, 8, 8});
    EXPECT_EQ(eta(Q, 0), Integer(1));
    EXPECT_EQ(eta(Q, 1), Integer(8));
    EXPECT_EQ(eta(Q, 2), Integer(64));
    EXPECT_EQ(eta(Q, 3), Integer(512)); // b_2, one step past the last index
    EXPECT_THROW(eta(Q, 4), std::invalid_argument);
}

TEST(StandardRep, GreedyMatchesPinnedExamples) {
    DivChain chain({Integer(3), Integer(6)});
    auto rep = standard_rep(Angle::from_fraction(1, 6), chain);
    EXPECT_EQ(rep.cs, (std::vector<Integer>{0, 1}));
    EXPECT_EQ(rep.residual, Rational(0));
    EXPECT_TRUE(is_standard(rep));
    // the competing expansion 1/6 = 1/3 - 1/6 fails the tie-breaking condition
    EXPECT_FALSE(is_standard(chain, Angle::from_fraction(1, 6), {Integer(1), Integer(-1)}));

    DivChain chain2({Integer(8), Integer(64)});
    auto rep2 = standard_rep(Angle::from_fraction(9, 64), chain2);
    EXPECT_EQ(rep2.cs, (std::vector<Integer>{1, 1}));
    EXPECT_EQ(rep2.residual, Rational(0));
    EXPECT_EQ(rep2.support(), (std::vector<std::size_t>{0, 1}));
}

TEST(StandardRep, RoundTripOnRandomAngles) {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> ds;
        Integer d = 1 + static_cast<std::int64_t>(rng.below(6));
        std::size_t len = 1 + rng.below(4);
        for (std::size_t i = 0; i < len; ++i) {
            ds.push_back(d);
            d *= rng.range(2, 6);
        }
        DivChain chain(ds);
        std::int64_t den = rng.range(1, 2000);
        Angle z = Angle::from_fraction(rng.range(-den, den), den);
        auto rep = standard_rep(z, chain);
        ASSERT_TRUE(is_standard(rep));
        Rational sum = rep.residual;
        for (std::size_t i = 0; i < rep.cs.size(); ++i)
            sum += Rational(rep.cs[i], chain.ds[i]);
        ASSERT_EQ(Angle::from_rational(sum), z);
    }
}

TEST(Membership, ScaledCharactersInPolar) {
    QSeq Q({8, 8, 8, 8});
    EXPECT_TRUE(check_etak_membership(Q, 1, 2)); // hits the closed boundary 1/4 exactly
    QSeq Q2({8, 8});
    EXPECT_TRUE(check_etak_membership(Q2, 1, 7));  // q-1 at the last index
    EXPECT_FALSE(check_etak_membership(Q2, 1, 3)); // 3/8 lands outside
    EXPECT_THROW(check_etak_membership(Q2, 1, 0), std::invalid_argument);
}

TEST(Membership, PairedCharactersUnconditional) {
    for (auto qs : {std::vector<std::int64_t>{8, 8, 8}, {7, 3}, {2, 2, 2}, {5, 9, 4, 2}}) {
        QSeq Q(qs);
        for (std::size_t k1 = 0; k1 < Q.depth(); ++k1)
            for (std::size_t k2 = k1 + 1; k2 <= Q.depth(); ++k2) {
                EXPECT_TRUE(check_k1k2_membership(Q, k1, k2, true));
                EXPECT_TRUE(check_k1k2_membership(Q, k1, k2, false));
            }
    }
    // floor-bracket instead of strict-floor on the second index breaks it
    QSeq Q({8, 8, 8});
    Integer chi = k1k2_character(Q, 0, 1, true, Rounding::FloorBracket);
    EXPECT_EQ(chi, Integer(18));
    EXPECT_FALSE(in_polar_of_X(Q, chi)); // witness: 18/64 = 9/32 > 1/4 at 1/64
}

TEST(TruncatedHull, PinnedSmallCases) {
    auto th = truncated_hull(QSeq({8, 8}), {});
    EXPECT_EQ(th.bN, Integer(64));
    EXPECT_EQ(th.hull_residues, (std::vector<std::int64_t>{0, 1, 8, 56, 63}));
    EXPECT_TRUE(th.equal);

    auto all4 = truncated_hull(QSeq({2, 2}), {});
    EXPECT_EQ(all4.x_residues.size(), 4u); // X is already the whole group
    EXPECT_TRUE(all4.equal);

    auto single = truncated_hull(QSeq({5}), {});
    EXPECT_EQ(single.hull_residues, (std::vector<std::int64_t>{0, 1, 4}));
    EXPECT_TRUE(single.equal);
}

TEST(TruncatedHull, MixedSevenThreeGrowsAndViolatesForm) {
    auto report = check_ternary_form(QSeq({7, 3}), {});
    EXPECT_FALSE(report.hypothesis_ok);
    EXPECT_FALSE(report.all_pm1);
    EXPECT_FALSE(report.hull.equal);
    bool found = false;
    for (const auto& v : report.violations)
        if (v.residue == 5) {
            found = true;
            EXPECT_EQ(v.cs, (std::vector<Integer>{2, -1})); // 5/21 = 2/7 - 1/21
        }
    EXPECT_TRUE(found);
}

TEST(TruncatedHull, TernaryFormHoldsUnderRatioHypothesis) {
    for (auto qs : {std::vector<std::int64_t>{8, 8, 8}, {7, 4, 8}, {4, 4, 4}, {2, 2}, {3, 4, 5}}) {
        auto report = check_ternary_form(QSeq(qs), {});
        EXPECT_TRUE(report.hypothesis_ok);
        EXPECT_TRUE(report.all_pm1) << "qs[0]=" << qs[0];
    }
}

TEST(TruncatedHull, PrefixHullIsRestrictionOfLongerHull) {
    // members of the deeper hull that lie in the coarser cyclic subgroup form
    // exactly the coarser hull
    for (auto qs : {std::vector<std::int64_t>{4, 5, 6}, {8, 8, 8}, {3, 4, 4}, {2, 3, 5}}) {
        QSeq Q(qs);
        for (std::size_t N = 0; N + 1 < Q.qs.size(); ++N) {
            auto partial = truncated_hull(Q.prefix(N), {});
            auto full = truncated_hull(Q, {});
            Integer ratio = full.bN / partial.bN;
            std::vector<std::int64_t> restricted;
            for (auto r : full.hull_residues)
                if (Integer(r) % ratio == 0)
                    restricted.push_back((Integer(r) / ratio).convert_to<std::int64_t>());
            std::sort(restricted.begin(), restricted.end());
            ASSERT_EQ(restricted, partial.hull_residues) << "prefix N=" << N;
        }
    }
}

TEST(SupportRatio, BoundsAndSmallestRatio) {
    auto rep = standard_rep(Angle::from_fraction(9, 64), DivChain({Integer(8), Integer(64)}));
    EXPECT_EQ(S_of(rep), Rational(1, 7));
    auto b0 = support_ratio_bounds(rep, 0);
    EXPECT_EQ(b0.value, Rational(9, 64));
    EXPECT_EQ(b0.lower, Rational(3, 28)); // (1 - 1/7)/8
    EXPECT_EQ(b0.upper, Rational(1, 7));  // (1 + 1/7)/8
    EXPECT_TRUE(b0.within());
    auto b1 = support_ratio_bounds(rep, 1);
    EXPECT_TRUE(b1.within());

    // the last support index contributes no ratio, so S = 0 there
    auto lone = standard_rep(Angle::from_fraction(1, 64), DivChain({Integer(8), Integer(64)}));
    EXPECT_EQ(S_of(lone), Rational(0));

    EXPECT_THROW(support_ratio_bounds(rep, 5), std::invalid_argument);
}

TEST(SupportRatio, BoundsHoldOnRandomTernaryAngles) {
    Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> ds;
        Integer d = rng.range(2, 9);
        std::size_t len = 2 + rng.below(3);
        for (std::size_t i = 0; i < len; ++i) {
            ds.push_back(d);
            d *= rng.range(2, 9);
        }
        DivChain chain(ds);
        // build an exact ternary combination, then re-derive its representation
        Rational sum(0);
        for (std::size_t i = 0; i < chain.ds.size(); ++i)
            sum += Rational(rng.range(-1, 1), chain.ds[i]);
        auto rep = standard_rep(Angle::from_rational(sum), chain);
        if (!(rep.residual == Rational(0))) continue;
        bool ternary = true;
        for (const auto& c : rep.cs) ternary = ternary && c >= -1 && c <= 1;
        if (!ternary) continue;
        for (auto k : rep.support()) ASSERT_TRUE(support_ratio_bounds(rep, k).within());
    }
}

TEST(Estimate, FailsForAllRatiosAtLeastEight) {
    EXPECT_EQ(estimate_lhs(8, 8, Rational(1, 7)), Rational(9, 28));
    EXPECT_FALSE(estimate_inequality(8, 8, Rational(1, 7)));
    EXPECT_LT(Rational(7, 24), Rational(9, 28));
    EXPECT_TRUE(estimate_inequality(2, 2, Rational(1))); // tiny ratios satisfy it vacuously
    for (std::int64_t q1 = 8; q1 <= 24; ++q1)
        for (std::int64_t q2 = 8; q2 <= 24; ++q2)
            EXPECT_FALSE(estimate_inequality(q1, q2, Rational(1, 7)))
                << q1 << "," << q2;
}

TEST(Lift, ScalesNullSequencesIntoTheEighthInterval) {
    auto rep = lift_to_reals({Rational(1), Rational(1, 8), Rational(1, 64)});
    EXPECT_EQ(rep.alpha, Rational(1, 8));
    EXPECT_EQ(rep.qs.qs, (std::vector<std::int64_t>{8, 8, 8}));
    EXPECT_TRUE(rep.within_eighth);

    auto rep2 = lift_to_reals({Rational(2), Rational(1, 5)});
    EXPECT_EQ(rep2.alpha, Rational(1, 16));
    EXPECT_EQ(rep2.qs.qs, (std::vector<std::int64_t>{8, 10}));

    try {
        lift_to_reals({Rational(2), Rational(3, 5)});
        FAIL() << "expected hypothesis_error";
    } catch (const hypothesis_error& e) {
        EXPECT_EQ(e.index, 1u); // 2 / (3/5) = 10/3 is not an integer
    }
    try {
        lift_to_reals({Rational(1), Rational(1, 4)});
        FAIL() << "expected hypothesis_error";
    } catch (const hypothesis_error& e) {
        EXPECT_EQ(e.index, 1u); // ratio 4 < 8
    }
    EXPECT_THROW(lift_to_reals({Rational(1, 8), Rational(1, 4)}), std::invalid_argument);
    EXPECT_THROW(lift_to_reals({}), std::invalid_argument);
}

TEST(Lift, SocleExampleUsesPrimesAboveEight) {
    auto Q = socle_example(3);
    EXPECT_EQ(Q.qs, (std::vector<std::int64_t>{11, 13, 17}));
    EXPECT_EQ(Q.b(2), Integer(2431));
    EXPECT_THROW(socle_example(0), std::invalid_argument);
}

TEST(Budget, SharedAcrossHullStages) {
    ScanOptions tiny;
    tiny.budget = 100;
    EXPECT_THROW(truncated_hull(QSeq({8, 8, 8}), tiny), budget_exceeded);
}
