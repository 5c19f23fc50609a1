#include <gtest/gtest.h>

#include "fiblike/binomial.hpp"

using namespace fiblike;

namespace {

const std::vector<SequenceSpec> specs{{0, 1}, {2, 1}, {1, 1}, {3, -5}};

SequenceOracle fib_oracle()
{
    return [](Index j) { return fib(j); };
}

} // namespace

TEST(Binomial, Coefficients)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(17, 0), 1);
    EXPECT_EQ(binomial(30, 15), 155117520);
    EXPECT_EQ(binomial(4, -1), 0);
    EXPECT_EQ(binomial(4, 5), 0);
    // Pascal's rule.
    for (Index n = 1; n <= 40; ++n)
        for (Index k = 0; k <= n; ++k)
            ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Lemma1, Examples)
{
    EXPECT_EQ(lemma1_partial_sum(squares_linear_recurrence(), squares_oracle({0, 1}), 2, 6), 5078);
    EXPECT_EQ(lemma1_partial_sum({{1, 1}, {1, 2}}, fib_oracle(), 1, 5), 12);
    EXPECT_EQ(fib(7) - 1, 12);
    EXPECT_EQ(lemma1_partial_sum({{1, 1}, {1, 2}}, fib_oracle(), BigRat(2, 3), 0), 0);
    EXPECT_EQ(lemma1_partial_sum(squares_linear_recurrence(), squares_oracle({3, -5}), BigRat(1, 2), 0), 9);
}

TEST(Lemma1, Errors)
{
    // 1 - x - x^2 vanishes nowhere on the rationals, but 1 - 2x does at x = 1/2.
    EXPECT_THROW(lemma1_partial_sum({{2}, {1}}, fib_oracle(), BigRat(1, 2), 3), SingularDenominator);
    EXPECT_THROW(lemma1_partial_sum({{1, 0}, {1, 2}}, fib_oracle(), 1, 3), InvalidDescriptor);
    EXPECT_THROW(lemma1_partial_sum({{1, 1}, {1, 1}}, fib_oracle(), 1, 3), InvalidDescriptor);
    EXPECT_THROW(lemma1_partial_sum({{1, 1}, {0, 2}}, fib_oracle(), 1, 3), InvalidDescriptor);
    // x = -1 is a root of 1 - 2x - 2x^2 + x^3.
    EXPECT_THROW(lemma1_partial_sum(squares_linear_recurrence(), squares_oracle({0, 1}), -1, 3),
                 SingularDenominator);
}

TEST(Lemma1Property, MatchesBruteForce)
{
    std::vector<BigRat> xs;
    for (auto s : {"0", "1", "2", "-2", "1/2", "-1/3", "3/7", "-7/2"})
        xs.push_back(parse_rational(s));
    for (const auto& spec : specs) {
        const auto oracle = squares_oracle(spec);
        for (const auto& x : xs)
            for (Index n = 0; n <= 20; ++n)
                ASSERT_EQ(lemma1_partial_sum(squares_linear_recurrence(), oracle, x, n),
                          weighted_sum_brute(oracle, x, n));
    }
    const auto fibs = fib_oracle();
    for (const auto& x : xs)
        for (Index n : {0, 1, 7, 100})
            ASSERT_EQ(lemma1_partial_sum({{1, 1}, {1, 2}}, fibs, x, n), weighted_sum_brute(fibs, x, n));
}

TEST(Lemma5, Examples)
{
    const auto rec = squares_four_term(1, -1, 2);
    const auto oracle = squares_oracle({2, 1});
    for (int v = 1; v <= 6; ++v) {
        const auto zero = lemma5_sides(rec, oracle, v, 7, 0);
        EXPECT_EQ(zero.lhs, BigRat(oracle(7)));
        EXPECT_EQ(zero.rhs, BigRat(oracle(7)));
    }
    EXPECT_EQ(lemma5_residual(rec, oracle, 1, 3, 4), 0);
    EXPECT_EQ(lemma5_residual(rec, oracle, 4, -2, 3), 0);
}

TEST(Lemma5, Errors)
{
    const auto oracle = squares_oracle({2, 1});
    // s = k makes F_{s-k} = 0 and the coefficients vanish.
    EXPECT_THROW(lemma5_residual(squares_four_term(2, 2, 3), oracle, 1, 0, 2), InvalidDescriptor);
    EXPECT_THROW(lemma5_residual(squares_four_term(1, -1, 2), oracle, 7, 0, 2), InvalidDescriptor);
    // The Fibonacci numbers do not satisfy the squares recurrence.
    EXPECT_THROW(lemma5_residual(squares_four_term(1, -1, 2), fib_oracle(), 1, 0, 2), OracleMismatch);
}

TEST(Theorem7, Examples)
{
    for (int which = 1; which <= 3; ++which) {
        const auto sides = theorem7_sides(SequenceSpec{3, -5}, which, 0, 2, -1, 4, 6);
        const BigInt g = g_at({3, -5}, 6);
        EXPECT_EQ(sides.lhs, BigRat(g * g));
        EXPECT_EQ(sides.rhs, BigRat(g * g));
    }
    EXPECT_EQ(theorem7_residual({0, 1}, 1, 2, 2, 1, 3, 0), 0);
    EXPECT_EQ(theorem7_residual({2, 1}, 3, 3, -1, 2, 4, 5), 0);
}

TEST(Theorem7, PrintedThirdIdentityDoesNotVanish)
{
    EXPECT_EQ(theorem7_printed_residual({2, 1}, 0, -1, 2, 4, 5), 0);
    EXPECT_NE(theorem7_printed_residual({2, 1}, 2, -1, 2, 4, 5), 0);
    EXPECT_EQ(theorem7_residual({2, 1}, 3, 2, -1, 2, 4, 5), 0);
}

TEST(Theorem7Property, AgreesWithLemma5UnderSubstitution)
{
    for (const auto& spec : specs) {
        const auto oracle = squares_oracle(spec);
        auto g = [&](Index i) { return g_at(spec, i); };
        for (Index s = -3; s <= 3; ++s)
            for (Index k = -3; k <= 3; ++k)
                for (Index m = -3; m <= 3; ++m) {
                    if (!theorem7_nondegenerate(s, k, m))
                        continue;
                    const auto rec = squares_four_term(s, k, m);
                    for (Index n = 0; n <= 4; ++n)
                        for (int which = 1; which <= 3; ++which) {
                            const auto lemma = lemma5_sides(rec, oracle, which, 2, n);
                            const auto thm = theorem7_sides(g, which, n, s, k, m, 2);
                            const int sign = theorem7_lemma_sign(which, n, s, k);
                            ASSERT_EQ(thm.lhs, sign * lemma.lhs);
                            ASSERT_EQ(thm.rhs, sign * lemma.rhs);
                        }
                }
    }
}

TEST(Theorem7Property, DegenerateTuplesStillBalance)
{
    for (Index s = -2; s <= 2; ++s)
        for (Index k = -2; k <= 2; ++k)
            for (Index m = -2; m <= 2; ++m)
                for (int which = 1; which <= 3; ++which)
                    ASSERT_EQ(theorem7_residual({1, 1}, which, 3, s, k, m, -1), 0);
}
