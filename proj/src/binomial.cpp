#include "fiblike/binomial.hpp"

#include <memory>
#include <set>

namespace fiblike {

namespace {

void require_nonnegative(Index n)
{
    if (n < 0)
        throw InvalidRange("n must be non-negative");
}

template <class T>
std::vector<T> power_table(const T& base, std::uint64_t top)
{
    std::vector<T> out;
    out.reserve(top + 1);
    out.emplace_back(1);
    for (std::uint64_t e = 1; e <= top; ++e)
        out.push_back(out.back() * base);
    return out;
}

} // namespace

BigInt binomial(Index n, Index k)
{
    if (n < 0)
        throw InvalidRange("binomial needs n >= 0");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (Index i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

void LinearRecurrence::validate() const
{
    if (coeffs.empty() || coeffs.size() != gaps.size())
        throw InvalidDescriptor("coefficient and gap lists must be non-empty and of equal length");
    for (const auto& f : coeffs)
        if (f == 0)
            throw InvalidDescriptor("recurrence coefficients must be nonzero");
    std::set<Index> seen;
    for (Index c : gaps) {
        if (c < 1)
            throw InvalidDescriptor("gaps must be positive");
        if (!seen.insert(c).second)
            throw InvalidDescriptor("gaps must be distinct");
    }
}

void FourTermRecurrence::validate() const
{
    if (h == 0 || f1 == 0 || f2 == 0 || f3 == 0)
        throw InvalidDescriptor("h, f1, f2, f3 must be nonzero");
    if (a == b || b == c || a == c)
        throw InvalidDescriptor("gaps a, b, c must be distinct");
}

SequenceOracle squares_oracle(const SequenceSpec& spec, Index lo, Index hi)
{
    auto window = std::make_shared<const SequenceWindow>(spec, lo, hi);
    return [window](Index j) {
        BigInt g = (*window)(j);
        return BigInt(g * g);
    };
}

LinearRecurrence squares_linear_recurrence() { return {{2, 2, -1}, {1, 2, 3}}; }

FourTermRecurrence squares_four_term(Index s, Index k, Index m)
{
    const BigInt fk = fib(k), fs = fib(s), fm = fib(m);
    const BigInt fsk = fib(s - k), fmk = fib(m - k), fms = fib(m - s);
    const int sign = neg_one_pow(s + k);
    return {
        BigRat(fms * fmk * fsk),
        BigRat(sign * fk * fs * fsk),
        BigRat(-sign * fk * fm * fmk),
        BigRat(fs * fm * fms),
        -m,
        -s,
        -k,
    };
}

BigRat weighted_sum_brute(const SequenceOracle& oracle, const BigRat& x, Index n)
{
    require_nonnegative(n);
    BigRat acc = 0;
    BigRat weight = 1;
    for (Index j = 0; j <= n; ++j) {
        acc += weight * BigRat(oracle(j));
        weight *= x;
    }
    return acc;
}

BigRat lemma1_partial_sum(const LinearRecurrence& rec, const SequenceOracle& oracle, const BigRat& x, Index n)
{
    rec.validate();
    require_nonnegative(n);
    Index max_gap = 0;
    for (Index c : rec.gaps)
        max_gap = std::max(max_gap, c);
    // x^e for 0 <= e <= n + max_gap is all that is needed.
    const auto xp = power_table(x, std::uint64_t(n + max_gap));

    BigRat den = 1;
    BigRat num = 0;
    for (std::size_t m = 0; m < rec.coeffs.size(); ++m) {
        const Index c = rec.gaps[m];
        den -= xp[std::size_t(c)] * rec.coeffs[m];
        BigRat inner = 0;
        for (Index j = 1; j <= c; ++j)
            inner += xp[std::size_t(c - j)] * BigRat(oracle(-j));
        for (Index j = n - c + 1; j <= n; ++j)
            inner -= xp[std::size_t(c + j)] * BigRat(oracle(j));
        num += rec.coeffs[m] * inner;
    }
    if (den == 0)
        throw SingularDenominator("1 - sum x^{c_m} f_m vanishes at this x");
    return num / den;
}

SumSides lemma5_sides(const FourTermRecurrence& rec, const SequenceOracle& oracle, int variant, Index r, Index n)
{
    rec.validate();
    return lemma5_sides_unchecked(rec, oracle, variant, r, n);
}

SumSides lemma5_sides_unchecked(const FourTermRecurrence& rec, const SequenceOracle& oracle, int variant, Index r,
                                Index n)
{
    require_nonnegative(n);
    if (variant < 1 || variant > 6)
        throw InvalidDescriptor("variant must be in 1..6");
    const Index a = rec.a, b = rec.b, c = rec.c;

    const auto top = std::uint64_t(2 * n);
    const auto hp = power_table(rec.h, top);
    const auto f1p = power_table(rec.f1, top);
    const auto f2p = power_table(rec.f2, top);
    const auto f3p = power_table(rec.f3, top);
    const auto at = [](const std::vector<BigRat>& t, Index e) -> const BigRat& { return t[std::size_t(e)]; };

    std::set<Index> touched{r};
    BigRat lhs = 0;
    for (Index j = 0; j <= n; ++j) {
        const BigInt bnj = binomial(n, j);
        for (Index i = 0; i <= j; ++i) {
            BigRat coeff(bnj * binomial(j, i));
            Index idx = 0;
            switch (variant) {
            case 1:
                coeff *= at(f3p, n - j) * at(f2p, n + j - i) * at(f1p, i);
                idx = r - c * n + (c - b) * j + (b - a) * i;
                break;
            case 2:
                coeff *= at(f2p, n - j) * at(f3p, n + j - i) * at(f1p, i);
                idx = r - b * n + (b - c) * j + (c - a) * i;
                break;
            case 3:
                coeff *= at(f1p, n - j) * at(f3p, n + j - i) * at(f2p, i);
                idx = r - a * n + (a - c) * j + (c - b) * i;
                break;
            case 4:
                coeff *= neg_one_pow(i) * at(hp, i) * at(f3p, n - j) * at(f2p, j - i);
                idx = r - (c - a) * n + (c - b) * j + b * i;
                break;
            case 5:
                coeff *= neg_one_pow(i) * at(hp, i) * at(f3p, n - j) * at(f1p, j - i);
                idx = r - (c - b) * n + (c - a) * j + a * i;
                break;
            case 6:
                coeff *= neg_one_pow(i) * at(hp, i) * at(f2p, n - j) * at(f1p, j - i);
                idx = r - (b - c) * n + (b - a) * j + a * i;
                break;
            }
            touched.insert(idx);
            lhs += coeff * BigRat(oracle(idx));
        }
    }

    for (Index t : touched) {
        const BigRat expect = rec.f1 * BigRat(oracle(t - a)) + rec.f2 * BigRat(oracle(t - b)) +
                              rec.f3 * BigRat(oracle(t - c));
        if (rec.h * BigRat(oracle(t)) != expect)
            throw OracleMismatch("oracle violates the recurrence at index " + std::to_string(t));
    }

    BigRat scale;
    switch (variant) {
    case 1: scale = at(hp, n) * at(f2p, n); break;
    case 2:
    case 3: scale = at(hp, n) * at(f3p, n); break;
    case 4: scale = pow(BigRat(-rec.f1), std::uint64_t(n)); break;
    case 5: scale = pow(BigRat(-rec.f2), std::uint64_t(n)); break;
    default: scale = pow(BigRat(-rec.f3), std::uint64_t(n)); break;
    }
    return {std::move(lhs), scale * BigRat(oracle(r))};
}

BigRat lemma5_residual(const FourTermRecurrence& rec, const SequenceOracle& oracle, int variant, Index r, Index n)
{
    return lemma5_sides(rec, oracle, variant, r, n).residual();
}

bool theorem7_nondegenerate(Index s, Index k, Index m)
{
    return s != 0 && k != 0 && m != 0 && s != k && s != m && k != m;
}

int theorem7_lemma_sign(int which, Index n, Index s, Index k)
{
    return which == 3 ? neg_one_pow((s + k) * n) : neg_one_pow((s + k + 1) * n);
}

namespace {

struct FibFactors {
    std::vector<BigInt> s, k, m, ms, mk, sk;

    FibFactors(Index n, Index s_, Index k_, Index m_)
    {
        const auto top = std::uint64_t(2 * n);
        s = power_table(fib(s_), top);
        k = power_table(fib(k_), top);
        m = power_table(fib(m_), top);
        ms = power_table(fib(m_ - s_), top);
        mk = power_table(fib(m_ - k_), top);
        sk = power_table(fib(s_ - k_), top);
    }
};

const BigInt& at(const std::vector<BigInt>& t, Index e) { return t[std::size_t(e)]; }

} // namespace

SumSides theorem7_sides(const std::function<BigInt(Index)>& g, int which, Index n, Index s, Index k, Index m,
                        Index r)
{
    require_nonnegative(n);
    if (which < 1 || which > 3)
        throw InvalidRange("double binomial identity index must be in 1..3");
    const FibFactors F(n, s, k, m);
    auto g2 = [&](Index i) {
        BigInt v = g(i);
        return BigInt(v * v);
    };

    BigInt lhs = 0;
    for (Index j = 0; j <= n; ++j) {
        const BigInt bnj = binomial(n, j);
        for (Index i = 0; i <= j; ++i) {
            BigInt term = bnj * binomial(j, i);
            switch (which) {
            case 1:
                term *= neg_one_pow(i + (s + k + 1) * j) * at(F.s, n - j + i) * at(F.k, n + j) * at(F.m, 2 * n - i) *
                        at(F.ms, n - j) * at(F.mk, n + j - i) * at(F.sk, i);
                term *= g2(r + k * n + (s - k) * j + (m - s) * i);
                break;
            case 2:
                term *= neg_one_pow(j + (s + k) * (i + j)) * at(F.s, n + j) * at(F.k, n - j + i) *
                        at(F.m, 2 * n - i) * at(F.ms, n + j - i) * at(F.mk, n - j) * at(F.sk, i);
                term *= g2(r + s * n + (k - s) * j + (m - k) * i);
                break;
            default:
                term *= neg_one_pow((s + k) * (i + j) + i) * at(F.k, n - j + i) * at(F.s, 2 * n - i) *
                        at(F.sk, n - j) * at(F.m, n + j) * at(F.ms, n + j - i) * at(F.mk, i);
                term *= g2(r + m * n + (k - m) * j + (s - k) * i);
                break;
            }
            lhs += term;
        }
    }

    const auto un = std::uint64_t(n);
    const BigInt fm = fib(m), fs = fib(s), fk = fib(k);
    const BigInt fms = fib(m - s), fmk = fib(m - k), fsk = fib(s - k);
    BigInt rhs;
    switch (which) {
    case 1: rhs = pow(BigInt(fm * fk * fmk * fmk * fms * fsk), un); break;
    case 2: rhs = neg_one_pow((s + k - 1) * n) * pow(BigInt(fm * fs * fms * fms * fmk * fsk), un); break;
    default: rhs = neg_one_pow((s + k) * n) * pow(BigInt(fm * fs * fmk * fsk * fms * fms), un); break;
    }
    rhs *= g2(r);
    return {BigRat(lhs), BigRat(rhs)};
}

SumSides theorem7_sides(const SequenceSpec& spec, int which, Index n, Index s, Index k, Index m, Index r)
{
    return theorem7_sides([&](Index i) { return g_at(spec, i); }, which, n, s, k, m, r);
}

BigInt theorem7_residual(const SequenceSpec& spec, int which, Index n, Index s, Index k, Index m, Index r)
{
    const auto sides = theorem7_sides(spec, which, n, s, k, m, r);
    return numerator(sides.residual());
}

BigInt theorem7_printed_residual(const SequenceSpec& spec, Index n, Index s, Index k, Index m, Index r)
{
    require_nonnegative(n);
    const FibFactors F(n, s, k, m);
    BigInt lhs = 0;
    for (Index j = 0; j <= n; ++j) {
        for (Index i = 0; i <= j; ++i) {
            const BigInt g = g_at(spec, r + m * n + (k - m) * j + (s - k) * i);
            lhs += neg_one_pow((s + k) * (i + j) + i) * binomial(n, j) * binomial(j, i) * at(F.s, n + j - i) *
                   at(F.k, i) * at(F.m, n + j) * at(F.ms, n + j - i) * at(F.mk, i) * g * g;
        }
    }
    const BigInt gr = g_at(spec, r);
    const BigInt rhs = neg_one_pow((s + k) * n) *
                       pow(BigInt(fib(m) * fib(s) * fib(m - k) * fib(s - k) * fib(m - s) * fib(m - s)),
                           std::uint64_t(n)) *
                       gr * gr;
    return lhs - rhs;
}

} // namespace fiblike
