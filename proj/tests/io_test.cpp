#include <qconvex/io.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

using namespace qconvex;

TEST(Io, GroupRoundTrip) {
    EXPECT_EQ(format_group(parse_group("Z4 x Z4 x Z5")), "Z4 x Z4 x Z5");
    EXPECT_EQ(parse_group("z2*z3").moduli, (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(parse_group("Z100").order(), Integer(100));
    EXPECT_TRUE(parse_group("1").moduli.empty());
    EXPECT_TRUE(parse_group("").moduli.empty());
    EXPECT_EQ(format_group(FiniteAbelianGroup()), "1");
    EXPECT_THROW(parse_group("Z4 x Q8"), std::invalid_argument);
    EXPECT_THROW(parse_group("Z1"), std::invalid_argument);
    EXPECT_THROW(parse_group("Z4 Z5"), std::invalid_argument);
}

TEST(Io, TupleRoundTrip) {
    EXPECT_EQ(parse_tuple("(1, 0, 3)"), (std::vector<std::int64_t>{1, 0, 3}));
    EXPECT_EQ(parse_tuple("(-2,5)"), (std::vector<std::int64_t>{-2, 5}));
    EXPECT_EQ(parse_tuple("()"), std::vector<std::int64_t>{});
    EXPECT_EQ(format_tuple({1, 0, 3}), "(1,0,3)");
    EXPECT_EQ(format_tuple({}), "()");
    EXPECT_THROW(parse_tuple("(1,)"), std::invalid_argument);
    EXPECT_THROW(parse_tuple("1,2"), std::invalid_argument);

    auto set = parse_tuple_set("(0,0), (1,0)");
    ASSERT_EQ(set.size(), 2u);
    EXPECT_EQ(set[1], (std::vector<std::int64_t>{1, 0}));
    EXPECT_TRUE(parse_tuple_set("").empty());
    EXPECT_THROW(parse_tuple_set("(0,0)(1,0)"), std::invalid_argument);
}

TEST(Io, RationalRoundTrip) {
    EXPECT_EQ(parse_rational("3/5"), Rational(3, 5));
    EXPECT_EQ(parse_rational("2"), Rational(2));
    EXPECT_EQ(parse_rational("-7/2"), Rational(-7, 2));
    EXPECT_EQ(format_rational(Rational(9, 28)), "9/28");
    EXPECT_EQ(format_rational(Rational(4)), "4");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);

    auto xs = parse_rational_list("1, 1/8, 1/64");
    ASSERT_EQ(xs.size(), 3u);
    EXPECT_EQ(xs[2], Rational(1, 64));
    EXPECT_THROW(parse_rational_list(",3"), std::invalid_argument);
}

TEST(Io, RatioListAndPrimesMacro) {
    EXPECT_EQ(parse_qs("8,8,8,8").qs, (std::vector<std::int64_t>{8, 8, 8, 8}));
    EXPECT_EQ(parse_qs("primes>8:n=4").qs, (std::vector<std::int64_t>{11, 13, 17, 19}));
    EXPECT_THROW(parse_qs(""), std::invalid_argument);
    EXPECT_THROW(parse_qs("8,0"), std::invalid_argument);
    EXPECT_THROW(parse_qs("primes>8:n=0"), std::invalid_argument);
}

TEST(Io, SymbolicRoundTrip) {
    auto G = parse_symbolic("Z2^inf x Z5^3");
    ASSERT_EQ(G.factors.size(), 2u);
    EXPECT_TRUE(G.factors[0].mult.infinite);
    EXPECT_EQ(G.factors[1].mult, Mult::of(3));
    EXPECT_EQ(format_symbolic(G), "Z2^inf x Z5^3");

    EXPECT_EQ(format_symbolic(parse_symbolic("Z7")), "Z7");
    EXPECT_EQ(format_symbolic(parse_symbolic("Z4^2 x Z4^inf")), "Z4^inf");
    EXPECT_EQ(format_symbolic(parse_symbolic("1")), "1");
    EXPECT_THROW(parse_symbolic("Z2^-1"), std::invalid_argument);
    EXPECT_THROW(parse_symbolic("Z^4"), std::invalid_argument);
}
