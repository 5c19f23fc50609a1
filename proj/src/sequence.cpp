#include "fiblike/sequence.hpp"

#include <array>
#include <bit>
#include <cstdlib>

namespace fiblike {

namespace {

constexpr int kSmallFib = 92;

constexpr std::array<std::int64_t, kSmallFib + 1> make_small_fib()
{
    std::array<std::int64_t, kSmallFib + 1> t{};
    t[0] = 0;
    t[1] = 1;
    for (int i = 2; i <= kSmallFib; ++i)
        t[i] = t[i - 1] + t[i - 2];
    return t;
}

constexpr auto small_fib = make_small_fib();

std::uint64_t magnitude(Index j) { return j < 0 ? std::uint64_t(-(j + 1)) + 1 : std::uint64_t(j); }

} // namespace

SequenceSpec::SequenceSpec(BigInt g0, BigInt g1) : g0_(std::move(g0)), g1_(std::move(g1))
{
    if (g0_ == 0 && g1_ == 0)
        throw InvalidSpec("initial terms must not both be zero");
}

std::pair<BigInt, BigInt> fib_pair(std::uint64_t n)
{
    if (n < kSmallFib)
        return {BigInt(small_fib[n]), BigInt(small_fib[n + 1])};
    // F_{2i} = F_i (2F_{i+1} - F_i), F_{2i+1} = F_i^2 + F_{i+1}^2
    BigInt a = 0, b = 1;
    for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
        BigInt c = a * (2 * b - a);
        BigInt d = a * a + b * b;
        if ((n >> bit) & 1) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

BigInt fib(Index j)
{
    const auto n = magnitude(j);
    BigInt f = n <= kSmallFib ? BigInt(small_fib[n]) : fib_pair(n).first;
    if (j < 0 && n % 2 == 0)
        f = -f;
    return f;
}

BigInt lucas(Index j)
{
    const auto n = magnitude(j);
    auto [f, f1] = fib_pair(n);
    BigInt l = 2 * f1 - f;
    if (j < 0 && n % 2 == 1)
        l = -l;
    return l;
}

BigInt g_at(const SequenceSpec& spec, Index j)
{
    if (j >= 0) {
        auto [f, f1] = fib_pair(std::uint64_t(j));
        return (f1 - f) * spec.g0() + f * spec.g1();
    }
    const auto n = magnitude(j);
    auto [f, f1] = fib_pair(n);
    BigInt l = 2 * f1 - f;
    BigInt g = (f1 - f) * spec.g0() + f * spec.g1();
    BigInt result = spec.g0() * l - g;
    if (n % 2 == 1)
        result = -result;
    return result;
}

std::pair<BigInt, BigInt> g_pair(const SequenceSpec& spec, Index j)
{
    if (j < 0)
        return {g_at(spec, j), g_at(spec, j + 1)};
    auto [f, f1] = fib_pair(std::uint64_t(j));
    BigInt g = (f1 - f) * spec.g0() + f * spec.g1();
    BigInt next = f * spec.g0() + f1 * spec.g1();
    return {std::move(g), std::move(next)};
}

RecurrenceWalker::RecurrenceWalker(const SequenceSpec& spec) : cur_(spec.g0()), next_(spec.g1()) {}

RecurrenceWalker::RecurrenceWalker(const SequenceSpec& spec, Index start) : RecurrenceWalker(spec)
{
    seek(start);
}

void RecurrenceWalker::forward()
{
    BigInt after = cur_ + next_;
    cur_.swap(next_);
    next_.swap(after);
    ++pos_;
}

void RecurrenceWalker::backward()
{
    // G_{p-1} = G_{p+1} - G_p
    BigInt before = next_ - cur_;
    next_.swap(cur_);
    cur_.swap(before);
    --pos_;
}

void RecurrenceWalker::seek(Index target)
{
    while (pos_ < target)
        forward();
    while (pos_ > target)
        backward();
}

std::vector<BigInt> g_range(const SequenceSpec& spec, Index lo, Index hi)
{
    if (lo > hi)
        throw InvalidRange("g_range requires lo <= hi");
    RecurrenceWalker walker(spec, lo);
    std::vector<BigInt> out;
    out.reserve(std::size_t(hi - lo + 1));
    out.push_back(walker.value());
    while (walker.position() < hi) {
        walker.forward();
        out.push_back(walker.value());
    }
    return out;
}

SequenceWindow::SequenceWindow(const SequenceSpec& spec, Index lo, Index hi)
    : spec_(spec), lo_(lo), values_(g_range(spec, lo, hi))
{
}

BigInt SequenceWindow::operator()(Index j) const
{
    if (j >= lo_ && j - lo_ < Index(values_.size()))
        return values_[std::size_t(j - lo_)];
    return g_at(spec_, j);
}

} // namespace fiblike
