#pragma once

// Fibonacci, Lucas and general Fibonacci-like sequences at any signed index.

#include <utility>
#include <vector>

#include "fiblike/numeric.hpp"

namespace fiblike {

/// A Fibonacci-like sequence G_j = G_{j-1} + G_{j-2} fixed by its two
/// initial terms. The pair (0, 0) is rejected.
class SequenceSpec {
public:
    SequenceSpec(BigInt g0, BigInt g1);

    static SequenceSpec fibonacci() { return {0, 1}; }
    static SequenceSpec lucas() { return {2, 1}; }

    const BigInt& g0() const noexcept { return g0_; }
    const BigInt& g1() const noexcept { return g1_; }

    friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

private:
    BigInt g0_;
    BigInt g1_;
};

/// (F_n, F_{n+1}) by fast doubling; O(log n) multiplications.
std::pair<BigInt, BigInt> fib_pair(std::uint64_t n);

BigInt fib(Index j);
BigInt lucas(Index j);

/// G_j via the addition formula G_j = F_{j-1} G_0 + F_j G_1 for j >= 0 and
/// G_{-j} = (-1)^j (G_0 L_j - G_j) below zero.
BigInt g_at(const SequenceSpec& spec, Index j);

/// (G_j, G_{j+1}) sharing one fast-doubling pass when j >= 0.
std::pair<BigInt, BigInt> g_pair(const SequenceSpec& spec, Index j);

/// Steps the recurrence one index at a time from (G_0, G_1). Never calls the
/// fast evaluators, so it serves as the brute-force backbone.
class RecurrenceWalker {
public:
    explicit RecurrenceWalker(const SequenceSpec& spec);
    RecurrenceWalker(const SequenceSpec& spec, Index start);

    Index position() const noexcept { return pos_; }
    const BigInt& value() const noexcept { return cur_; }
    const BigInt& next_value() const noexcept { return next_; }

    void forward();
    void backward();
    void seek(Index target);

private:
    BigInt cur_;
    BigInt next_;
    Index pos_ = 0;
};

/// [G_lo, ..., G_hi] from a single recurrence sweep.
std::vector<BigInt> g_range(const SequenceSpec& spec, Index lo, Index hi);

/// Dense table of G_j over [lo, hi], for grid sweeps that hit the same
/// small indices many times. Falls back to g_at outside the window.
class SequenceWindow {
public:
    SequenceWindow(const SequenceSpec& spec, Index lo, Index hi);

    BigInt operator()(Index j) const;
    const SequenceSpec& spec() const noexcept { return spec_; }

private:
    SequenceSpec spec_;
    Index lo_;
    std::vector<BigInt> values_;
};

} // namespace fiblike
