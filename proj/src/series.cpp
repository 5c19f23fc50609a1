#include "fiblike/summation.hpp"

#include <algorithm>

namespace fiblike {

Poly::Poly(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigRat Poly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

BigRat Poly::operator()(const BigRat& x) const
{
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b)
{
    std::vector<BigRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] + b[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b)
{
    std::vector<BigRat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a[i] - b[i];
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigRat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

SeriesPrefix series_expand(const Poly& num, const Poly& den, std::size_t order)
{
    if (den[0] == 0)
        throw ZeroConstantTerm("denominator has zero constant term");
    const BigRat lead = den[0];
    SeriesPrefix out;
    out.coeffs.reserve(order + 1);
    for (std::size_t t = 0; t <= order; ++t) {
        BigRat c = num[t];
        const std::size_t reach = std::min<std::size_t>(t, std::size_t(std::max(0L, den.degree())));
        for (std::size_t i = 1; i <= reach; ++i)
            c -= den[i] * out.coeffs[t - i];
        out.coeffs.push_back(c / lead);
    }
    return out;
}

namespace {

const Poly& square_denominator()
{
    // 1 - 2x - 2x^2 + x^3
    static const Poly den{1, -2, -2, 1};
    return den;
}

} // namespace

IdentityReport gf_fib_square_check(std::size_t order)
{
    const SeriesPrefix series = series_expand(Poly{0, 1, -1}, square_denominator(), order);
    IdentityReport report;
    report.identity = "GF_FIB_SQUARES";
    report.param_names = {"t"};
    // Termwise values from a plain sweep, independent of the fast evaluator.
    const auto fibs = g_range(SequenceSpec::fibonacci(), 0, Index(order));
    for (std::size_t t = 0; t <= order; ++t) {
        ++report.checked;
        BigRat diff = series.coeffs[t] - BigRat(fibs[t] * fibs[t]);
        if (diff != 0)
            report.failures.push_back({{BigRat(t)}, std::move(diff)});
    }
    return report;
}

SeriesPrefix spread_product_series(const SequenceSpec& spec, Index k, std::size_t order)
{
    const BigInt& g0 = spec.g0();
    const BigInt& g1 = spec.g1();
    const BigInt g2 = g0 + g1;
    const BigInt fk2 = fib(k) * fib(k);
    // x L_k^2 - (1 + x^2) F_k^2 - 2x F_{k+1} F_{k-1}
    const Poly weight{BigRat(-fk2), BigRat(lucas(k) * lucas(k) - 2 * fib(k + 1) * fib(k - 1)), BigRat(-fk2)};
    // x^2 G_2^2 - (2x^2 + 2x - 1) G_0^2 - (2x^2 - x) G_1^2
    const Poly initial{BigRat(g0 * g0), BigRat(g1 * g1 - 2 * g0 * g0), BigRat(g2 * g2 - 2 * g0 * g0 - 2 * g1 * g1)};
    SeriesPrefix series = series_expand(weight * initial, square_denominator(), order);
    series.coeffs[0] += BigRat(fk2 * g0 * g0);
    if (order >= 1)
        series.coeffs[1] -= BigRat(fk2 * (g1 - g0) * (g1 - g0));
    return series;
}

IdentityReport gf_spread_product_check(const SequenceSpec& spec, Index k, std::size_t order)
{
    const SeriesPrefix rhs = spread_product_series(spec, k, order);
    IdentityReport report;
    report.identity = "GF_SPREAD_PRODUCT";
    report.param_names = {"g0", "g1", "k", "t"};
    const Index span = Index(order) + std::abs(k);
    const auto values = g_range(spec, -span - 1, span + 1);
    auto g = [&](Index j) { return values[std::size_t(j + span + 1)]; };
    for (std::size_t t = 0; t <= order; ++t) {
        ++report.checked;
        BigInt lhs = 0;
        if (t >= 1) {
            const Index j = Index(t) - 1;
            lhs = neg_one_pow(k) * 2 * g(j + k) * g(j - k);
        }
        BigRat diff = BigRat(lhs) - rhs.coeffs[t];
        if (diff != 0)
            report.failures.push_back({{BigRat(spec.g0()), BigRat(spec.g1()), BigRat(k), BigRat(t)}, std::move(diff)});
    }
    return report;
}

} // namespace fiblike
