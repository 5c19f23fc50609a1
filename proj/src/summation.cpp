#include "fiblike/summation.hpp"

namespace fiblike {

namespace {

BigInt sq(const BigInt& v) { return v * v; }
BigRat sq(const BigRat& v) { return v * v; }

void require_nonnegative(Index n)
{
    if (n < 0)
        throw InvalidRange("upper limit n must be non-negative");
}

/// Accumulates sum_j x^j T_j for x = p/q as N / q^{t-1}, where
/// N = sum_j p^j q^{t-1-j} T_j, so no gcd is taken until the end.
class WeightedAccumulator {
public:
    explicit WeightedAccumulator(const BigRat& x)
        : p_(numerator(x)), q_(denominator(x)), unit_p_(p_ == 1), unit_q_(q_ == 1)
    {
    }

    void add(const BigInt& term)
    {
        if (!unit_q_)
            acc_ *= q_;
        if (unit_p_)
            acc_ += term;
        else {
            acc_ += ppow_ * term;
            ppow_ *= p_;
        }
        ++terms_;
    }

    BigRat result() const
    {
        if (unit_q_ || terms_ == 0)
            return BigRat(acc_);
        return BigRat(acc_, pow(q_, terms_ - 1));
    }

private:
    BigInt p_, q_;
    bool unit_p_, unit_q_;
    BigInt acc_ = 0;
    BigInt ppow_ = 1;
    std::uint64_t terms_ = 0;
};

/// Steps a_j b_j for two sequences obeying the Fibonacci recurrence using
/// additions only: with a_{j+2} = a_j + a_{j+1} (same for b), the four
/// products a_{j+u} b_{j+v}, u, v in {0, 1}, update bilinearly.
class ProductWalker {
public:
    ProductWalker(const RecurrenceWalker& a, const RecurrenceWalker& b)
        : p00_(a.value() * b.value()), p01_(a.value() * b.next_value()), p10_(a.next_value() * b.value()),
          p11_(a.next_value() * b.next_value())
    {
    }

    const BigInt& value() const noexcept { return p00_; }

    void forward()
    {
        p00_ += p01_;
        p00_ += p10_;
        p00_ += p11_;
        p01_ += p11_;
        p10_ += p11_;
        swap(p01_, p10_);
        swap(p00_, p11_);
    }

private:
    BigInt p00_, p01_, p10_, p11_;
};

struct SequenceTail {
    BigInt g0, g1, gn, gn1;
};

SequenceTail tail(const SequenceSpec& spec, Index n)
{
    auto [gn, gn1] = g_pair(spec, n);
    return {spec.g0(), spec.g1(), std::move(gn), std::move(gn1)};
}

// sum_{j=0}^{n} G_{j+k}^2 from G_0, G_1, G_n, G_{n+1}.
BigInt unit_initial_form(const SequenceSpec& spec, Index k, Index n)
{
    const auto t = tail(spec, n);
    const BigInt fk = fib(k), fk1 = fib(k + 1), fkm1 = fib(k - 1);
    const BigInt base = t.gn * t.gn1 - t.g0 * t.g1 + sq(t.g0);
    return (fk1 * fkm1 + sq(fk)) * base + fkm1 * fk * (t.gn - t.g1 + t.g0) * (t.gn + t.g1 - t.g0) +
           fk1 * fk * (t.gn1 - t.g0) * (t.gn1 + t.g0);
}

struct ShiftedSquares {
    BigInt gkm1, gk, gk1;
};

ShiftedSquares shifted(const SequenceSpec& spec, Index k)
{
    auto [gk, gk1] = g_pair(spec, k);
    BigInt gkm1 = gk1 - gk;
    return {std::move(gkm1), std::move(gk), std::move(gk1)};
}

// F_N F_{N+1} (G_{k+1}^2 + G_k^2) + (F_N^2 - 1)(G_{k+1}^2 - G_{k-1}^2) + parity G_{k+1} G_k
BigInt unit_shifted_form(const ShiftedSquares& g, Index big_n, int parity)
{
    auto [fn, fn1] = fib_pair(std::uint64_t(big_n));
    return fn * fn1 * (sq(g.gk1) + sq(g.gk)) + (sq(fn) - 1) * (sq(g.gk1) - sq(g.gkm1)) + parity * g.gk1 * g.gk;
}

BigInt fib_shift_form(Index k, Index big_n, int parity)
{
    auto [fn, fn1] = fib_pair(std::uint64_t(big_n));
    return fn * fn1 * fib(2 * k + 1) + (sq(fn) - 1) * fib(2 * k) + parity * fib(k) * fib(k + 1);
}

} // namespace

BigRat sum_sq_brute(const WeightedSumQuery& q)
{
    return sum_product_brute(q.spec, q.k, q.k, q.x, q.n);
}

BigRat sum_product_brute(const SequenceSpec& spec, Index k, Index s, const BigRat& x, Index n)
{
    require_nonnegative(n);
    WeightedAccumulator acc(x);
    ProductWalker walker(RecurrenceWalker(spec, k), RecurrenceWalker(spec, s));
    for (Index j = 0; j <= n; ++j) {
        acc.add(walker.value());
        if (j < n)
            walker.forward();
    }
    return acc.result();
}

BigRat sum_F_sq_closed(const BigRat& x, Index n)
{
    require_nonnegative(n);
    auto [f1, f2] = fib_pair(std::uint64_t(n) + 1);
    if (x == 1)
        return BigRat((f2 - f1) * f1);
    const BigInt f3 = f1 + f2;
    if (x == -1) {
        // 5(-1)^{n-1} S = (n+3)F_{n+3}^2 - (3n+8)F_{n+2}^2 + (n-1)F_{n+1}^2 + 3(-1)^{n-1}
        const int sign = neg_one_pow(n - 1);
        const BigInt rhs = BigInt(n + 3) * sq(f3) - BigInt(3 * n + 8) * sq(f2) + BigInt(n - 1) * sq(f1) + 3 * sign;
        return BigRat(rhs, BigInt(5 * sign));
    }
    const BigRat xn1 = pow(x, std::uint64_t(n) + 1);
    const BigRat num = x * (1 - x) - (1 - 2 * x - 2 * sq(x)) * xn1 * BigRat(sq(f1)) -
                       (1 - 2 * x) * xn1 * x * BigRat(sq(f2)) - xn1 * sq(x) * BigRat(sq(f3));
    const BigRat den = 1 - 2 * x - 2 * sq(x) + x * sq(x);
    return num / den;
}

BigRat sum_G_sq_closed(const SequenceSpec& spec, const BigRat& x, Index n)
{
    require_nonnegative(n);
    if (x == -1)
        return sum_sq_initfree({spec, 0, x, n});
    const auto t = tail(spec, n);
    if (x == 1)
        return BigRat(t.gn * t.gn1 - t.g0 * t.g1 + sq(t.g0));
    const BigInt gn2 = t.gn + t.gn1;
    const BigInt gn3 = t.gn1 + gn2;
    const BigInt g2 = t.g0 + t.g1;
    const BigRat x2 = sq(x);
    const BigRat xn1 = pow(x, std::uint64_t(n) + 1);
    const BigRat lead = 2 * x2 + 2 * x - 1;
    const BigRat num = -lead * BigRat(sq(t.g0)) - (2 * x2 - x) * BigRat(sq(t.g1)) + x2 * BigRat(sq(g2)) +
                       lead * xn1 * BigRat(sq(t.gn1)) + (2 * x - 1) * xn1 * x * BigRat(sq(gn2)) -
                       xn1 * x2 * BigRat(sq(gn3));
    const BigRat den = x * x2 - 2 * x2 - 2 * x + 1;
    return num / den;
}

BigRat sum_sq_closed(const WeightedSumQuery& q)
{
    require_nonnegative(q.n);
    const BigRat& x = q.x;
    if (x == 0)
        return BigRat(sq(g_at(q.spec, q.k)));
    if (x == -1)
        return sum_sq_initfree(q);
    if (x == 1)
        return BigRat(unit_initial_form(q.spec, q.k, q.n));

    const BigRat s = sum_G_sq_closed(q.spec, x, q.n);
    const auto t = tail(q.spec, q.n);
    const BigInt fk = fib(q.k), fk1 = fib(q.k + 1), fkm1 = fib(q.k - 1);
    const BigRat xn1 = pow(x, std::uint64_t(q.n) + 1);
    const BigRat scaled = (x * BigRat(fk1 * fkm1) + BigRat(fk1 * fk) - sq(x) * BigRat(fkm1 * fk)) * s +
                          x * BigRat(fkm1 * fk) * (xn1 * BigRat(sq(t.gn)) - BigRat(sq(BigInt(t.g1 - t.g0)))) +
                          BigRat(fk1 * fk) * (xn1 * BigRat(sq(t.gn1)) - BigRat(sq(t.g0)));
    return scaled / x;
}

BigRat sum_sq_initfree(const WeightedSumQuery& q)
{
    require_nonnegative(q.n);
    const BigRat& x = q.x;
    const auto [gk, gk1] = g_pair(q.spec, q.k);
    const BigRat sf = sum_F_sq_closed(x, q.n);
    const BigInt fn = fib(q.n);
    // sum_{j=0}^{n} (-x)^j
    const BigRat alternating =
        x == -1 ? BigRat(q.n + 1) : (1 - pow(BigRat(-x), std::uint64_t(q.n) + 1)) / (1 + x);
    const BigInt cross = gk * gk1;
    return sf * (BigRat(sq(gk1)) + x * BigRat(sq(gk)) + 2 * (1 - x) * BigRat(cross)) +
           (1 - pow(x, std::uint64_t(q.n) + 1) * BigRat(sq(fn))) * BigRat(sq(gk) - 2 * cross) +
           alternating * BigRat(2 * cross);
}

BigRat sum_product_closed(const SequenceSpec& spec, Index k, Index s, const BigRat& x, Index n)
{
    if (k == 0 || s == 0)
        throw DegenerateFactor("2 F_s F_k vanishes for k = 0 or s = 0");
    const BigInt fs = fib(s), fk = fib(k);
    const BigRat ak = sum_sq_closed({spec, k, x, n});
    const BigRat as = k == s ? ak : sum_sq_closed({spec, s, x, n});
    const BigRat sg = sum_G_sq_closed(spec, x, n);
    return (BigRat(sq(fs)) * ak + BigRat(sq(fk)) * as - BigRat(sq(fib(s - k))) * sg) / BigRat(2 * fs * fk);
}

BigInt product_unit_split(const SequenceSpec& spec, Index k, Index s, Index n)
{
    require_nonnegative(n);
    const auto t = tail(spec, n);
    const BigInt fs = fib(s), fk = fib(k);
    const BigInt c1 = sq(fs) * (fib(k + 1) * fib(k - 1) + sq(fk)) + sq(fk) * (fib(s + 1) * fib(s - 1) + sq(fs)) -
                      sq(fib(s - k));
    const BigInt c_lower = fs * fk * (fs * fib(k - 1) + fk * fib(s - 1));
    const BigInt c_upper = fs * fk * (fs * fib(k + 1) + fk * fib(s + 1));
    return c1 * (t.gn * t.gn1 - t.g0 * t.g1 + sq(t.g0)) + c_lower * (t.gn - t.g1 + t.g0) * (t.gn + t.g1 - t.g0) +
           c_upper * (t.gn1 - t.g0) * (t.gn1 + t.g0);
}

namespace {

BigInt product_shifted_form(const SequenceSpec& spec, Index k, Index s, Index big_n, int parity)
{
    const auto gk = shifted(spec, k);
    const auto gs = shifted(spec, s);
    const BigInt fs2 = sq(fib(s)), fk2 = sq(fib(k));
    auto [fn, fn1] = fib_pair(std::uint64_t(big_n));
    const auto t = tail(spec, big_n);
    return fn * fn1 * (fs2 * (sq(gk.gk1) + sq(gk.gk)) + fk2 * (sq(gs.gk1) + sq(gs.gk))) +
           (sq(fn) - 1) * (fs2 * (sq(gk.gk1) - sq(gk.gkm1)) + fk2 * (sq(gs.gk1) - sq(gs.gkm1))) +
           parity * (fs2 * gk.gk1 * gk.gk + fk2 * gs.gk1 * gs.gk) -
           sq(fib(s - k)) * (t.gn * t.gn1 - t.g0 * t.g1 + sq(t.g0));
}

} // namespace

BigInt product_unit_shifted(const SequenceSpec& spec, Index k, Index s, Index n)
{
    require_nonnegative(n);
    return product_shifted_form(spec, k, s, n, 1 + neg_one_pow(n));
}

BigInt product_unit_odd(const SequenceSpec& spec, Index k, Index s, Index n)
{
    if (n < 1)
        throw InvalidRange("odd prefix needs n >= 1");
    return product_shifted_form(spec, k, s, 2 * n - 1, 0);
}

BigInt product_unit_even(const SequenceSpec& spec, Index k, Index s, Index n)
{
    require_nonnegative(n);
    return product_shifted_form(spec, k, s, 2 * n, 2);
}

CorollarySums corollary_product_sums(const SequenceSpec& spec, const BigRat& x, Index n)
{
    require_nonnegative(n);
    const BigRat s = sum_G_sq_closed(spec, x, n);
    const auto t = tail(spec, n);
    const BigInt gm1 = t.g1 - t.g0;
    const BigRat xn1 = pow(x, std::uint64_t(n) + 1);
    CorollarySums out;
    out.shifted = (1 - x) * s + xn1 * BigRat(sq(t.gn)) - BigRat(sq(gm1));
    if (x == 0) {
        out.adjacent = BigRat(t.g0 * (t.g1 - t.g0));
    } else {
        const BigRat doubled = (1 - x - sq(x)) * s + xn1 * BigRat(sq(t.gn1)) + xn1 * x * BigRat(sq(t.gn)) -
                               x * BigRat(sq(gm1)) - BigRat(sq(t.g0));
        out.adjacent = doubled / (2 * x);
    }
    return out;
}

CorollarySums corollary_product_brute(const SequenceSpec& spec, const BigRat& x, Index n)
{
    return {sum_product_brute(spec, 1, -2, x, n), sum_product_brute(spec, 0, -1, x, n)};
}

CorollaryUnit corollary_unit(const SequenceSpec& spec, Index n)
{
    require_nonnegative(n);
    const auto t = tail(spec, n);
    const BigInt gnm1 = t.gn1 - t.gn;
    return {
        (t.gn - t.g1 + t.g0) * (t.gn + t.g1 - t.g0),
        t.gn1 * gnm1 + (t.gn - t.g0) * (t.gn + t.g0) + (t.g1 - t.g0) * (2 * t.g0 - t.g1),
    };
}

BigRat spread_product_closed(const SequenceSpec& spec, Index k, const BigRat& x, Index n)
{
    require_nonnegative(n);
    if (x == 0)
        return BigRat(g_at(spec, k) * g_at(spec, -k));
    const BigRat s = sum_G_sq_closed(spec, x, n);
    const auto t = tail(spec, n);
    const BigInt fk2 = sq(fib(k));
    const BigRat xn1 = pow(x, std::uint64_t(n) + 1);
    const BigRat rhs =
        (x * BigRat(sq(lucas(k))) - (1 + sq(x)) * BigRat(fk2) - 2 * x * BigRat(fib(k - 1) * fib(k + 1))) * s +
        x * BigRat(fk2) * (xn1 * BigRat(sq(t.gn)) - BigRat(sq(BigInt(t.g1 - t.g0)))) -
        BigRat(fk2) * (xn1 * BigRat(sq(t.gn1)) - BigRat(sq(t.g0)));
    return rhs / (neg_one_pow(k) * 2 * x);
}

BigInt spread_product_unit(const SequenceSpec& spec, Index k, Index n)
{
    require_nonnegative(n);
    const auto t = tail(spec, n);
    const BigInt gnm1 = t.gn1 - t.gn;
    const BigInt gn2 = t.gn + t.gn1;
    const BigInt fk2 = sq(fib(k));
    return (sq(lucas(k)) - 2 * fib(k - 1) * fib(k + 1) - 2 * fk2) * (t.gn * t.gn1 - t.g0 * t.g1 + sq(t.g0)) -
           fk2 * (gnm1 * gn2 - 2 * t.g0 * t.g1 + sq(t.g1));
}

UnitSumSpecials unit_sum_specials(const SequenceSpec& spec, Index k, Index n)
{
    require_nonnegative(n);
    const auto g = shifted(spec, k);
    UnitSumSpecials out{
        unit_initial_form(spec, k, n),
        unit_shifted_form(g, n, 1 + neg_one_pow(n)),
        std::nullopt,
        unit_shifted_form(g, 2 * n, 2),
        fib_shift_form(k, n, 1 + neg_one_pow(n)),
        std::nullopt,
        fib_shift_form(k, 2 * n, 2),
    };
    if (n >= 1) {
        out.odd_prefix = unit_shifted_form(g, 2 * n - 1, 0);
        out.fib_odd_prefix = fib_shift_form(k, 2 * n - 1, 0);
    }
    return out;
}

} // namespace fiblike
