#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

#include "fiblike/grid.hpp"

using namespace fiblike;

namespace {

// Fails whenever the axis sum is a multiple of 7; degenerate at the origin.
CaseOutcome planted(const SequenceSpec& spec, std::span<const BigRat> v)
{
    BigRat total = 0;
    for (const auto& x : v)
        total += x;
    CaseOutcome out;
    out.degenerate = total == 0 && v[0] == 0;
    if (numerator(total) % 7 == 0 && total != 0)
        out.residual = total + BigRat(spec.g0());
    return out;
}

} // namespace

TEST(Sweep, RecordsFailuresInLexicographicOrder)
{
    const SequenceSpec specs[] = {{2, 1}, {0, 1}};
    const auto report = sweep("planted", specs, {Axis::symmetric("a", 5), Axis::symmetric("b", 5)}, planted);
    EXPECT_FALSE(report.passed());
    EXPECT_EQ(report.param_names, (std::vector<std::string>{"g0", "g1", "a", "b"}));
    EXPECT_EQ(report.checked + report.degenerate.size(), 2u * 11 * 11);
    for (std::size_t i = 1; i < report.failures.size(); ++i)
        EXPECT_TRUE(params_less(report.failures[i - 1].params, report.failures[i].params));
    EXPECT_EQ(report.failures.front().params.front(), 0);
}

TEST(Sweep, WorkerCountDoesNotChangeReport)
{
    const SequenceSpec specs[] = {{2, 1}, {0, 1}, {3, -5}};
    const std::vector<Axis> axes{Axis::symmetric("a", 6), Axis::symmetric("b", 6), Axis::range("c", 0, 3)};
    const auto base = sweep("planted", specs, axes, planted, {.workers = 1});
    for (unsigned w : {2u, 3u, 4u, 16u})
        EXPECT_EQ(sweep("planted", specs, axes, planted, {.workers = w}), base) << w;
}

TEST(Sweep, SeededSampleIsReproducible)
{
    const SequenceSpec specs[] = {{1, 1}};
    const std::vector<Axis> axes{Axis::symmetric("a", 20), Axis::symmetric("b", 20)};
    std::atomic<int> calls = 0;
    CaseFn counting = [&](const SequenceSpec& s, std::span<const BigRat> v) {
        ++calls;
        return planted(s, v);
    };
    const auto a = sweep("planted", specs, axes, counting, {.workers = 1, .sample = 50, .seed = 9});
    EXPECT_EQ(calls.load(), 50);
    const auto b = sweep("planted", specs, axes, counting, {.workers = 4, .sample = 50, .seed = 9});
    EXPECT_EQ(a, b);
}

TEST(Sweep, ParallelForPropagatesExceptions)
{
    EXPECT_THROW(parallel_for(100, 4,
                              [](std::uint64_t i) {
                                  if (i == 57)
                                      throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(Sweep, WorkersFromEnvironment)
{
    ::setenv("FIBLIKE_WORKERS", "6", 1);
    EXPECT_EQ(workers_from_env(1), 6u);
    ::setenv("FIBLIKE_WORKERS", "zero", 1);
    EXPECT_EQ(workers_from_env(3), 3u);
    ::unsetenv("FIBLIKE_WORKERS");
    EXPECT_EQ(workers_from_env(2), 2u);
}

TEST(Numeric, RationalParsing)
{
    EXPECT_EQ(parse_rational("3/6"), BigRat(1, 2));
    EXPECT_EQ(parse_rational("-7/2"), BigRat(-7, 2));
    EXPECT_EQ(parse_rational("12"), 12);
    EXPECT_EQ(to_string(parse_rational("8/4")), "2");
    EXPECT_EQ(to_string(BigRat(-3, 9)), "-1/3");
    EXPECT_THROW(parse_rational("0.5"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1/-2"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_EQ(pow(BigRat(0), 0), 1);
}
