#include <gtest/gtest.h>

#include "fiblike/summation.hpp"

using namespace fiblike;

namespace {

const std::vector<SequenceSpec> specs{{0, 1}, {2, 1}, {1, 1}, {1, 0}, {3, -5}, {-2, 7}};

std::vector<BigRat> weights()
{
    std::vector<BigRat> out;
    for (auto s : {"0", "1", "-1", "2", "-2", "1/2", "-1/3", "3/7", "-7/2"})
        out.push_back(parse_rational(s));
    return out;
}

BigRat r(const char* s) { return parse_rational(s); }

} // namespace

TEST(SumBrute, Examples)
{
    EXPECT_EQ(sum_sq_brute({{0, 1}, 0, 2, 2}), 6);
    EXPECT_EQ(sum_sq_brute({{0, 1}, 0, 1, 5}), 40);
    EXPECT_EQ(sum_sq_brute({{3, -5}, 4, r("-7/2"), 0}), 81);
    EXPECT_EQ(sum_sq_brute({{3, -5}, 4, 0, 6}), 81);
    // Frozen from an independent rational-arithmetic oracle.
    EXPECT_EQ(sum_sq_brute({{-2, 7}, -6, r("-1/3"), 37}),
              r("893078870099005857217/150094635296999121"));
    EXPECT_THROW(sum_sq_brute({{0, 1}, 0, 1, -1}), InvalidRange);
}

TEST(SumClosed, Examples)
{
    EXPECT_EQ(sum_sq_closed({{0, 1}, 0, 2, 2}), 6);
    EXPECT_EQ(sum_sq_closed({{2, 1}, 0, 1, 3}), 30);
    EXPECT_EQ(sum_sq_closed({{0, 1}, 0, -1, 3}), -4);
}

TEST(SumClosed, FibonacciSquares)
{
    EXPECT_EQ(sum_F_sq_closed(2, 2), 6);
    EXPECT_EQ(sum_F_sq_closed(1, 5), 40);
    EXPECT_EQ(sum_F_sq_closed(-1, 3), -4);
    for (Index n = 0; n <= 60; ++n)
        for (const auto& x : weights())
            ASSERT_EQ(sum_F_sq_closed(x, n), sum_sq_brute({{0, 1}, 0, x, n})) << n << " " << x;
}

TEST(SumClosed, InitialValueFreeForm)
{
    EXPECT_EQ(sum_sq_initfree({{2, 1}, 3, r("1/2"), 10}), r("1089093/1024"));
    EXPECT_EQ(sum_sq_initfree({{2, 1}, 0, -1, 4}), 45);
    EXPECT_EQ(sum_sq_brute({{2, 1}, 0, -1, 4}), 45);
    for (const auto& x : weights())
        for (Index n : {0, 1, 4, 11})
            ASSERT_EQ(sum_sq_initfree({{0, 1}, 0, x, n}), sum_sq_closed({{0, 1}, 0, x, n}));
}

TEST(SumClosed, ProductSums)
{
    EXPECT_EQ(sum_product_closed({0, 1}, 1, 2, 1, 3), 24);
    EXPECT_EQ(sum_product_brute({0, 1}, 1, 2, 1, 3), 24);
    EXPECT_EQ(sum_product_closed({2, 1}, 2, -1, r("1/3"), 6), r("2989/729"));
    EXPECT_EQ(sum_product_closed({3, -5}, 4, 4, r("3/7"), 9), sum_sq_closed({{3, -5}, 4, r("3/7"), 9}));
    EXPECT_THROW(sum_product_closed({0, 1}, 0, 2, 1, 3), DegenerateFactor);
    EXPECT_THROW(sum_product_closed({0, 1}, 2, 0, 1, 3), DegenerateFactor);
}

TEST(SumClosed, UnitProductForms)
{
    for (const auto& spec : specs)
        for (Index k = -5; k <= 5; ++k)
            for (Index s = -5; s <= 5; ++s) {
                if (k == 0 || s == 0)
                    continue;
                for (Index n = 0; n <= 9; ++n) {
                    const BigRat brute = 2 * BigRat(fib(s) * fib(k)) * sum_product_brute(spec, k, s, 1, n);
                    ASSERT_EQ(BigRat(product_unit_split(spec, k, s, n)), brute);
                    ASSERT_EQ(BigRat(product_unit_shifted(spec, k, s, n)), brute);
                    ASSERT_EQ(BigRat(product_unit_even(spec, k, s, n)),
                              2 * BigRat(fib(s) * fib(k)) * sum_product_brute(spec, k, s, 1, 2 * n));
                    if (n >= 1)
                        ASSERT_EQ(BigRat(product_unit_odd(spec, k, s, n)),
                                  2 * BigRat(fib(s) * fib(k)) * sum_product_brute(spec, k, s, 1, 2 * n - 1));
                }
            }
}

TEST(SumClosed, CorollarySums)
{
    const auto unit = corollary_product_sums({0, 1}, 1, 3);
    EXPECT_EQ(unit.adjacent, 3);
    EXPECT_EQ((fib(4) * fib(2) + fib(3) * fib(3) - 1) / 2, 3);

    const SequenceSpec odd{3, -5};
    EXPECT_EQ(corollary_product_sums(odd, 1, 0).shifted, BigRat(g_at(odd, 1) * g_at(odd, -2)));
    EXPECT_EQ(corollary_product_sums(odd, 1, 0).shifted, -55);

    const auto alt = corollary_product_sums({2, 1}, -2, 5);
    EXPECT_EQ(alt.shifted, -1791);
    EXPECT_EQ(alt.adjacent, -2106);

    for (const auto& spec : specs)
        for (Index n = 0; n <= 12; ++n) {
            const auto u = corollary_unit(spec, n);
            const auto b = corollary_product_brute(spec, 1, n);
            ASSERT_EQ(BigRat(u.shifted), b.shifted);
            ASSERT_EQ(BigRat(u.adjacent_doubled), 2 * b.adjacent);
        }
}

TEST(SumClosed, SpreadProducts)
{
    EXPECT_EQ(spread_product_closed({0, 1}, 1, 1, 2), 3);
    EXPECT_EQ(spread_product_unit({0, 1}, 1, 2), -6);
    EXPECT_EQ(spread_product_closed({3, -5}, 4, r("2/5"), 8), r("-63944538/390625"));
    for (const auto& x : weights())
        EXPECT_EQ(spread_product_closed({2, 1}, 0, x, 7), sum_G_sq_closed({2, 1}, x, 7));
    for (const auto& spec : specs)
        for (Index k = -6; k <= 6; ++k)
            for (Index n = 0; n <= 10; ++n)
                ASSERT_EQ(BigRat(spread_product_unit(spec, k, n)),
                          neg_one_pow(k) * 2 * sum_product_brute(spec, k, -k, 1, n));
}

TEST(SumClosed, UnitSumSpecials)
{
    const auto v = unit_sum_specials({0, 1}, 2, 4);
    EXPECT_EQ(v.initial_form, 103);
    EXPECT_EQ(v.shifted_form, 103);
    EXPECT_EQ(v.fib_sum, 103);
    EXPECT_EQ(fib(4) * fib(5) * fib(5) + (fib(4) * fib(4) - 1) * fib(4) + 2 * fib(2) * fib(3), 103);

    const auto zero = unit_sum_specials({0, 1}, 0, 9);
    EXPECT_EQ(zero.initial_form, fib(9) * fib(10));

    const auto lucas = unit_sum_specials({2, 1}, -3, 7);
    EXPECT_EQ(lucas.initial_form, 105);
    EXPECT_EQ(lucas.shifted_form, 105);
    EXPECT_FALSE(unit_sum_specials({2, 1}, 1, 0).odd_prefix.has_value());
}

TEST(SumProperty, ParitySplit)
{
    for (const auto& spec : specs)
        for (Index k = -6; k <= 6; ++k)
            for (Index n = 1; n <= 15; ++n) {
                const auto v = unit_sum_specials(spec, k, n);
                const BigInt top = g_at(spec, 2 * n + k);
                ASSERT_EQ(*v.odd_prefix + top * top, v.even_prefix);
                ASSERT_EQ(BigRat(v.even_prefix), sum_sq_brute({spec, k, 1, 2 * n}));
                const BigInt ftop = fib(2 * n + k);
                ASSERT_EQ(*v.fib_odd_prefix + ftop * ftop, v.fib_even_prefix);
            }
}

TEST(SumProperty, ClosedFormsMatchBruteOnSmallGrid)
{
    for (const auto& spec : specs)
        for (const auto& x : weights())
            for (Index n : {0, 1, 2, 5, 13})
                for (Index k = -3; k <= 3; ++k) {
                    const WeightedSumQuery q{spec, k, x, n};
                    const BigRat brute = sum_sq_brute(q);
                    ASSERT_EQ(sum_sq_closed(q), brute);
                    ASSERT_EQ(sum_sq_initfree(q), brute);
                    ASSERT_EQ(spread_product_closed(spec, k, x, n), sum_product_brute(spec, k, -k, x, n));
                    for (Index s = -3; s <= 3; ++s)
                        if (k != 0 && s != 0)
                            ASSERT_EQ(sum_product_closed(spec, k, s, x, n), sum_product_brute(spec, k, s, x, n));
                }
}

TEST(SumProperty, LargeIndexSanity)
{
    const WeightedSumQuery q{{2, 1}, 17, r("-3/2"), 400};
    EXPECT_EQ(sum_sq_closed(q), sum_sq_brute(q));
    const WeightedSumQuery unit{{2, 1}, -40, 1, 5000};
    EXPECT_EQ(sum_sq_closed(unit), sum_sq_brute(unit));
}
