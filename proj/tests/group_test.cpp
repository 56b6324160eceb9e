#include <qconvex/group.hpp>
#include <qconvex/io.hpp>
#include <qconvex/rng.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

using namespace qconvex;

namespace {

std::vector<GroupElement> elems(const FiniteAbelianGroup& G,
                                std::initializer_list<std::vector<std::int64_t>> lst) {
    std::vector<GroupElement> out;
    for (const auto& c : lst) out.push_back(normalize(G, GroupElement(c)));
    return canonical_set(G, out);
}

std::vector<std::int64_t> residues(const std::vector<GroupElement>& set) {
    std::vector<std::int64_t> out;
    for (const auto& x : set) out.push_back(x.coords.at(0));
    return out;
}

} // namespace

TEST(Group, ValidationAndBasics) {
    EXPECT_THROW(FiniteAbelianGroup({4, 1}), std::invalid_argument);
    EXPECT_THROW(FiniteAbelianGroup({0}), std::invalid_argument);
    FiniteAbelianGroup trivial;
    EXPECT_EQ(trivial.order(), Integer(1));
    FiniteAbelianGroup G({2, 3});
    EXPECT_EQ(G.order(), Integer(6));
    EXPECT_EQ(G.rank(), 2u);
}

TEST(Group, CharacterEvaluationIsExact) {
    FiniteAbelianGroup G({2, 3});
    EXPECT_EQ(eval(G, Character({1, 1}), GroupElement({1, 2})),
              Angle::from_fraction(1, 6)); // 1/2 + 2/3 = 7/6 = 1/6 mod 1
    EXPECT_EQ(eval(G, Character({0, 0}), GroupElement({1, 2})), Angle());
    FiniteAbelianGroup Z8({8});
    EXPECT_EQ(eval(Z8, Character({3}), GroupElement({5})), Angle::from_fraction(15, 8));
}

TEST(Group, AddNegateScaleNormalize) {
    FiniteAbelianGroup G({4, 6});
    EXPECT_EQ(add(G, GroupElement({3, 5}), GroupElement({2, 2})), GroupElement({1, 1}));
    EXPECT_EQ(negate(G, GroupElement({1, 0})), GroupElement({3, 0}));
    EXPECT_EQ(scale_element(G, GroupElement({1, 1}), 10), GroupElement({2, 4}));
    EXPECT_EQ(normalize(G, GroupElement({-1, 7})), GroupElement({3, 1}));
    EXPECT_THROW(normalize(G, GroupElement({1})), std::invalid_argument);
}

TEST(Group, ElementOrder) {
    FiniteAbelianGroup G({2, 3});
    EXPECT_EQ(element_order(G, GroupElement({1, 1})), Integer(6));
    EXPECT_EQ(element_order(G, GroupElement({0, 0})), Integer(1));
    FiniteAbelianGroup H({8});
    EXPECT_EQ(element_order(H, GroupElement({2})), Integer(4));
}

TEST(Group, PolarOfSmallCyclicSet) {
    FiniteAbelianGroup G({4});
    auto P = polar(G, elems(G, {{0}, {1}, {3}}), {});
    std::vector<Character> expected{Character({0}), Character({1}), Character({3})};
    EXPECT_EQ(P, expected);
}

TEST(Group, PrepolarOfSingleCharacter) {
    FiniteAbelianGroup G({4});
    auto B = prepolar(G, {Character({1})}, {});
    EXPECT_EQ(residues(B), (std::vector<std::int64_t>{0, 1, 3}));
}

TEST(Group, EmptySetsGiveFullDuals) {
    FiniteAbelianGroup G({2, 3});
    EXPECT_EQ(polar(G, {}, {}).size(), 6u);               // empty condition
    EXPECT_EQ(polar(G, {zero_element(G)}, {}).size(), 6u); // chi(0) = 0 always
    EXPECT_EQ(prepolar(G, {}, {}).size(), 6u);
}

TEST(Group, OrderTwoElementSeparation) {
    FiniteAbelianGroup Z2({2});
    auto P = polar(Z2, elems(Z2, {{0}, {1}}), {});
    EXPECT_EQ(P, (std::vector<Character>{Character({0})})); // 1/2 is outside the arc
    auto B = prepolar(Z2, {Character({1})}, {});
    EXPECT_EQ(residues(B), (std::vector<std::int64_t>{0}));
}

TEST(Group, HullFixedPoints) {
    FiniteAbelianGroup Z5({5});
    EXPECT_EQ(qc_hull(Z5, {zero_element(Z5)}, {}), elems(Z5, {{0}}));
    FiniteAbelianGroup Z4({4});
    auto X = elems(Z4, {{0}, {1}, {3}});
    EXPECT_TRUE(is_quasi_convex(Z4, X, {}));
}

TEST(Group, TwoTorsionCrossHullsToWholeGroup) {
    FiniteAbelianGroup G({2, 2});
    auto E = elems(G, {{0, 0}, {1, 0}, {0, 1}});
    auto hull = qc_hull(G, E, {});
    EXPECT_EQ(hull.size(), 4u);
    EXPECT_FALSE(is_quasi_convex(G, E, {}));
}

TEST(Group, SymmetricAxisPairIsQuasiConvex) {
    FiniteAbelianGroup G({4, 4});
    auto E = elems(G, {{0, 0}, {1, 0}, {3, 0}, {0, 1}, {0, 3}});
    EXPECT_TRUE(is_quasi_convex(G, E, {}));
}

TEST(Group, TrivialGroupHull) {
    FiniteAbelianGroup G;
    auto hull = qc_hull(G, {}, {});
    ASSERT_EQ(hull.size(), 1u);
    EXPECT_TRUE(hull[0].coords.empty()); // the empty tuple
}

TEST(Group, GeneratedSubgroup) {
    FiniteAbelianGroup G({8});
    auto H = generated_subgroup(G, elems(G, {{2}}));
    EXPECT_EQ(residues(H), (std::vector<std::int64_t>{0, 2, 4, 6}));
    auto whole = generated_subgroup(G, elems(G, {{3}}));
    EXPECT_EQ(whole.size(), 8u);
    auto trivial = generated_subgroup(G, {});
    EXPECT_EQ(trivial.size(), 1u);
}

TEST(Group, Independence) {
    FiniteAbelianGroup G({4, 4});
    EXPECT_TRUE(is_independent(G, elems(G, {{1, 0}, {0, 1}})));
    EXPECT_FALSE(is_independent(G, elems(G, {{1, 0}, {2, 0}})));
    EXPECT_TRUE(is_independent(G, elems(G, {{1, 0}})));
    EXPECT_TRUE(is_independent(G, {}));
    EXPECT_THROW(is_independent(G, elems(G, {{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST(Group, HomomorphismChecks) {
    FiniteAbelianGroup Z8({8});
    HomMatrix doubling{{2}};
    EXPECT_TRUE(hom_is_well_defined(Z8, Z8, doubling));
    EXPECT_EQ(apply_hom(Z8, Z8, doubling, GroupElement({5})), GroupElement({2}));
    EXPECT_TRUE(hom_image_hull_check(Z8, Z8, doubling, elems(Z8, {{0}, {1}, {7}}), {}));

    FiniteAbelianGroup Z4({4});
    HomMatrix bad{{1}}; // 8 * 1 != 0 mod 4 fails only when source modulus not divisible
    EXPECT_TRUE(hom_is_well_defined(Z8, Z4, HomMatrix{{1}})); // 8*1 = 0 mod 4
    EXPECT_FALSE(hom_is_well_defined(Z4, Z8, bad));           // 4*1 = 4 != 0 mod 8
    EXPECT_THROW(hom_image_hull_check(Z4, Z8, bad, elems(Z4, {{0}}), {}),
                 std::invalid_argument);
}

TEST(Group, IdentityAndProjectionPreserveHullInclusion) {
    FiniteAbelianGroup G({4, 4});
    auto E = elems(G, {{0, 0}, {1, 0}, {3, 0}, {0, 1}, {0, 3}});
    HomMatrix identity{{1, 0}, {0, 1}};
    EXPECT_TRUE(hom_image_hull_check(G, G, identity, E, {}));

    FiniteAbelianGroup Z4({4});
    HomMatrix projection{{1}, {0}}; // (x, y) -> x
    EXPECT_TRUE(hom_is_well_defined(G, Z4, projection));
    EXPECT_TRUE(hom_image_hull_check(G, Z4, projection, E, {}));
}

TEST(Group, ScanAgreesWithDirectEvaluationOnRandomSets) {
    Rng rng(20260814);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::int64_t> moduli;
        int r = 1 + static_cast<int>(rng.below(3));
        Integer order = 1;
        for (int i = 0; i < r; ++i) {
            moduli.push_back(rng.range(2, 12));
            order *= moduli.back();
        }
        if (order > 400) continue;
        FiniteAbelianGroup G(moduli);

        std::vector<GroupElement> E;
        std::uint64_t n = 1 + rng.below(5);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> c(G.rank());
            for (std::size_t j = 0; j < G.rank(); ++j)
                c[j] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(G.moduli[j])));
            E.push_back(GroupElement(std::move(c)));
        }
        E = canonical_set(G, E);

        auto P = polar(G, E, {});
        // recompute by direct exhaustive evaluation over all characters
        std::vector<Character> direct;
        std::vector<std::int64_t> chi(G.rank(), 0);
        for (Integer idx = 0; idx < G.order(); ++idx) {
            Character c(chi);
            bool ok = true;
            for (const auto& x : E) ok = ok && eval(G, c, x).in_Tplus();
            if (ok) direct.push_back(c);
            for (std::size_t j = G.rank(); j-- > 0;) {
                if (++chi[j] < G.moduli[j]) break;
                chi[j] = 0;
            }
        }
        ASSERT_EQ(P, direct) << "polar mismatch for " << format_group(G);
    }
}

TEST(Group, ThreadCountDoesNotChangeResults) {
    FiniteAbelianGroup G({6, 5, 7});
    auto E = elems(G, {{0, 0, 0}, {1, 2, 3}, {5, 3, 4}, {2, 0, 6}});
    ScanOptions serial;
    ScanOptions parallel;
    parallel.threads = 4;
    EXPECT_EQ(polar(G, E, serial), polar(G, E, parallel));
    EXPECT_EQ(qc_hull(G, E, serial), qc_hull(G, E, parallel));
}

TEST(Group, BudgetIsEnforcedAndReported) {
    FiniteAbelianGroup G({16, 16});
    auto E = elems(G, {{0, 0}, {1, 1}});
    ScanOptions tiny;
    tiny.budget = 10;
    try {
        polar(G, E, tiny);
        FAIL() << "expected budget_exceeded";
    } catch (const budget_exceeded& e) {
        EXPECT_EQ(e.limit, 10u);
        EXPECT_GE(e.required_at_least, 256u); // at least one evaluation per character
    }
}

TEST(Group, PolarAntitone) {
    FiniteAbelianGroup G({12});
    auto small = elems(G, {{0}, {1}});
    auto large = elems(G, {{0}, {1}, {2}});
    auto Ps = polar(G, small, {});
    auto Pl = polar(G, large, {});
    EXPECT_TRUE(std::includes(Ps.begin(), Ps.end(), Pl.begin(), Pl.end()));
}
