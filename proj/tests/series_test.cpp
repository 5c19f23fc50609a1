#include <gtest/gtest.h>

#include "fiblike/summation.hpp"

using namespace fiblike;

TEST(Poly, TrimsAndMultiplies)
{
    EXPECT_EQ(Poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE(Poly({0, 0}).is_zero());
    EXPECT_EQ(Poly({1, -1}) * Poly({1, 1}), Poly({1, 0, -1}));
    EXPECT_EQ(Poly({1, 1}) - Poly({1, 1}), Poly{});
    EXPECT_EQ(Poly({1, -2, -2, 1})(BigRat(-1)), 0);
}

TEST(Series, Examples)
{
    const auto fib_sq = series_expand(Poly{0, 1, -1}, Poly{1, -2, -2, 1}, 5);
    EXPECT_EQ(fib_sq.coeffs, (std::vector<BigRat>{0, 1, 1, 4, 9, 25}));

    const auto one = series_expand(Poly{1}, Poly{1}, 4);
    EXPECT_EQ(one.coeffs, (std::vector<BigRat>{1, 0, 0, 0, 0}));

    const auto geometric = series_expand(Poly{1}, Poly{1, -1}, 4);
    EXPECT_EQ(geometric.coeffs, (std::vector<BigRat>{1, 1, 1, 1, 1}));
    EXPECT_EQ(geometric.order(), 4u);

    EXPECT_THROW(series_expand(Poly{1}, Poly{0, 1}, 3), ZeroConstantTerm);
}

TEST(Series, ExpansionSatisfiesDefiningCongruence)
{
    const Poly num{BigRat(3, 2), -1, 0, 7};
    const Poly den{2, BigRat(-1, 3), 5};
    const auto t = series_expand(num, den, 12);
    const Poly product = den * Poly(t.coeffs);
    for (std::size_t i = 0; i <= 12; ++i)
        EXPECT_EQ(product[i], num[i]) << i;
}

TEST(Series, GeneratingFunctionChecks)
{
    EXPECT_TRUE(gf_fib_square_check(32).passed());
    EXPECT_EQ(gf_fib_square_check(32).checked, 33u);
    EXPECT_TRUE(gf_spread_product_check({2, 1}, 0, 16).passed());
    EXPECT_TRUE(gf_spread_product_check({0, 1}, 3, 24).passed());
    EXPECT_TRUE(gf_spread_product_check({3, -5}, -4, 20).passed());
}
