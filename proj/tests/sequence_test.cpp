#include <gtest/gtest.h>

#include "fiblike/sequence.hpp"

using namespace fiblike;

namespace {

const std::vector<SequenceSpec>& specs()
{
    static const std::vector<SequenceSpec> s{{0, 1}, {2, 1}, {1, 1}, {3, -5}, {1, 0}, {-2, 7}};
    return s;
}

} // namespace

TEST(Sequence, FibValues)
{
    EXPECT_EQ(fib(0), 0);
    EXPECT_EQ(fib(10), 55);
    EXPECT_EQ(fib(-5), 5);
    EXPECT_EQ(fib(-10), -55);
    EXPECT_EQ(fib(100), BigInt("354224848179261915075"));
    EXPECT_EQ(fib(-100), BigInt("-354224848179261915075"));
}

TEST(Sequence, LucasValues)
{
    EXPECT_EQ(lucas(0), 2);
    EXPECT_EQ(lucas(7), 29);
    EXPECT_EQ(lucas(-5), -11);
    EXPECT_EQ(lucas(-7), -29);
}

TEST(Sequence, GeneralTerms)
{
    EXPECT_EQ(g_at({0, 1}, 9), 34);
    EXPECT_EQ(g_at({2, 1}, -3), -4);
    EXPECT_EQ(g_at({3, -5}, 4), -9);
}

TEST(Sequence, RangeSweep)
{
    EXPECT_EQ(g_range({0, 1}, 0, 5), (std::vector<BigInt>{0, 1, 1, 2, 3, 5}));
    EXPECT_EQ(g_range({2, 1}, -2, 2), (std::vector<BigInt>{3, -1, 2, 1, 3}));
    EXPECT_EQ(g_range({1, 1}, 0, 0), (std::vector<BigInt>{1}));
    EXPECT_THROW(g_range({1, 1}, 3, 2), InvalidRange);
}

TEST(Sequence, RejectsZeroSpec) { EXPECT_THROW(SequenceSpec(0, 0), InvalidSpec); }

TEST(Sequence, FastDoublingMatchesIteration)
{
    BigInt a = 0, b = 1;
    for (std::uint64_t n = 0; n < 400; ++n) {
        auto [f, f1] = fib_pair(n);
        ASSERT_EQ(f, a) << n;
        ASSERT_EQ(f1, b) << n;
        BigInt c = a + b;
        a = b;
        b = c;
    }
}

TEST(SequenceProperty, RecurrenceHoldsEverywhere)
{
    for (const auto& spec : specs())
        for (Index j = -200; j <= 200; ++j)
            ASSERT_EQ(g_at(spec, j), g_at(spec, j - 1) + g_at(spec, j - 2)) << j;
}

TEST(SequenceProperty, NegativeIndexMatchesLucasFormAndBackwardSweep)
{
    for (const auto& spec : specs()) {
        const auto sweep = g_range(spec, -200, 0);
        for (Index j = 1; j <= 200; ++j) {
            const BigInt expected = neg_one_pow(j) * (spec.g0() * lucas(j) - g_at(spec, j));
            ASSERT_EQ(g_at(spec, -j), expected);
            ASSERT_EQ(sweep[std::size_t(200 - j)], expected);
        }
    }
}

TEST(SequenceProperty, SpecialisesToFibAndLucas)
{
    for (Index j = -200; j <= 200; ++j) {
        ASSERT_EQ(g_at(SequenceSpec::fibonacci(), j), fib(j));
        ASSERT_EQ(g_at(SequenceSpec::lucas(), j), lucas(j));
    }
}

TEST(SequenceProperty, FastAgreesWithSweepFarFromOrigin)
{
    for (const auto& spec : specs()) {
        for (Index centre : {Index(0), Index(10000), Index(-10000)}) {
            const auto sweep = g_range(spec, centre - 30, centre + 30);
            for (Index j = centre - 30; j <= centre + 30; ++j)
                ASSERT_EQ(g_at(spec, j), sweep[std::size_t(j - centre + 30)]) << j;
            const auto [g, next] = g_pair(spec, centre);
            EXPECT_EQ(g, sweep[30]);
            EXPECT_EQ(next, sweep[31]);
        }
    }
}

TEST(Sequence, WalkerRoundTrip)
{
    RecurrenceWalker w({3, -5});
    w.seek(25);
    const BigInt at25 = w.value();
    w.seek(-40);
    EXPECT_EQ(w.value(), g_at({3, -5}, -40));
    w.seek(25);
    EXPECT_EQ(w.value(), at25);
}
