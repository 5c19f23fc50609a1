#include "fiblike/identities.hpp"

#include <algorithm>
#include <cstdlib>

namespace fiblike {

namespace {

BigInt sq(const BigInt& v) { return v * v; }

template <class Seq>
BigInt main_residual_with(const Seq& g, Index j, Index k, Index m, Index s)
{
    auto terms = main_identity_terms(j, k, m, s);
    BigInt residual = terms.lhs.coefficient * sq(g(terms.lhs.index));
    for (const auto& t : terms.rhs)
        if (t.coefficient != 0)
            residual -= t.coefficient * sq(g(t.index));
    return residual;
}

// `g` evaluates G_j; `swept` must come from a recurrence sweep (used only where
// the fast evaluator would make the residual tautological).
template <class Seq, class Swept>
BigInt residual_with(IdentityId id, const SequenceSpec& spec, const Seq& g, const Swept& swept,
                     std::span<const Index> p)
{
    using enum IdentityId;
    switch (id) {
    case Main:
        return main_residual_with(g, p[0], p[1], p[2], p[3]);
    case BrousseauSq: {
        const Index j = p[0];
        return sq(g(j - 1)) + sq(g(j + 2)) - 2 * sq(g(j)) - 2 * sq(g(j + 1));
    }
    case ThreeSix: {
        const Index j = p[0];
        return sq(g(j + 2)) + 2 * sq(g(j - 2)) - 3 * sq(g(j - 1)) - 6 * sq(g(j));
    }
    case SixteenTwelve: {
        const Index j = p[0];
        return 3 * sq(g(j + 3)) + sq(g(j - 3)) - 16 * sq(g(j + 1)) - 12 * sq(g(j));
    }
    case FkShift: {
        const Index j = p[0], k = p[1];
        const BigInt fk = fib(k), fk1 = fib(k + 1), fkm1 = fib(k - 1);
        return fk * fk1 * sq(g(j + 1)) - fk * fkm1 * sq(g(j - 1)) - sq(g(j + k)) + fk1 * fkm1 * sq(g(j));
    }
    case Addition3Term: {
        const Index j = p[0], k = p[1], m = p[2], s = p[3];
        return fib(s - k) * g(j + m) - fib(m - k) * g(j + s) - neg_one_pow(s + k + 1) * fib(m - s) * g(j + k);
    }
    case M0Special: {
        const Index j = p[0], k = p[1], s = p[2];
        return neg_one_pow(k) * fib(s - k) * g(j) - fib(s) * g(j + k) + fib(k) * g(j + s);
    }
    case CrossTerm: {
        const Index j = p[0], k = p[1], s = p[2];
        const BigInt fs = fib(s), fk = fib(k);
        const BigInt gk = g(j + k), gs = g(j + s);
        return 2 * fs * fk * gk * gs - sq(fs) * sq(gk) - sq(fk) * sq(gs) + sq(fib(s - k)) * sq(g(j));
    }
    case MultFormula: {
        const Index m = p[0], n = p[1];
        return 5 * fib(m) * fib(n) - lucas(m + n) + neg_one_pow(n) * lucas(m - n);
    }
    case Sq3Term: {
        const Index j = p[0], k = p[1];
        const BigInt fk = fib(k), fk1 = fib(k + 1), fkm1 = fib(k - 1);
        return sq(g(j + k)) - fk1 * fkm1 * sq(g(j)) - fk1 * fk * sq(g(j + 1)) + fkm1 * fk * sq(g(j - 1));
    }
    case CassiniProd: {
        const Index j = p[0];
        const BigInt fj = fib(j), fj1 = fib(j - 1);
        return fj * fj1 - (sq(fj) - sq(fj1) + neg_one_pow(j));
    }
    case SpreadLk: {
        const Index j = p[0], k = p[1];
        return lucas(k) * g(j) - g(j + k) - neg_one_pow(k) * g(j - k);
    }
    case SpreadLkSq: {
        const Index j = p[0], k = p[1];
        const BigInt plus = g(j + k), minus = g(j - k);
        return sq(lucas(k)) * sq(g(j)) - sq(plus) - sq(minus) - 2 * neg_one_pow(k) * plus * minus;
    }
    case F2kComb: {
        const Index j = p[0], k = p[1], r = p[2];
        return fib(2 * k) * g(j + r) - fib(r + k) * g(j + k) + fib(r - k) * g(j - k);
    }
    case NegIndex: {
        const Index j = p[0];
        return swept(-j) - neg_one_pow(j) * (spec.g0() * lucas(j) - g_at(spec, j));
    }
    }
    throw UnknownIdentity("unhandled identity");
}

std::vector<IdentityInfo> build_catalog()
{
    using enum IdentityId;
    return {
        {Main, "MAIN",
         "F_s F_m F_{m-s} G_{j+k}^2 = F_{m-s} F_{m-k} F_{s-k} G_j^2 + (-1)^{s+k} F_k F_m F_{m-k} G_{j+s}^2"
         " - (-1)^{s+k} F_k F_s F_{s-k} G_{j+m}^2",
         {"j", "k", "m", "s"}, true, 8},
        {BrousseauSq, "BROUSSEAU_SQ", "G_{j-1}^2 + G_{j+2}^2 = 2G_j^2 + 2G_{j+1}^2", {"j"}, true, 50},
        {ThreeSix, "THREE_SIX", "G_{j+2}^2 + 2G_{j-2}^2 = 3G_{j-1}^2 + 6G_j^2", {"j"}, true, 50},
        {SixteenTwelve, "SIXTEEN_TWELVE", "3G_{j+3}^2 + G_{j-3}^2 = 16G_{j+1}^2 + 12G_j^2", {"j"}, true, 50},
        {FkShift, "FK_SHIFT", "F_k F_{k+1} G_{j+1}^2 - F_k F_{k-1} G_{j-1}^2 = G_{j+k}^2 - F_{k+1} F_{k-1} G_j^2",
         {"j", "k"}, true, 50},
        {Addition3Term, "ADDITION_3TERM", "F_{s-k} G_{j+m} = F_{m-k} G_{j+s} + (-1)^{s+k+1} F_{m-s} G_{j+k}",
         {"j", "k", "m", "s"}, true, 12},
        {M0Special, "M0_SPECIAL", "(-1)^k F_{s-k} G_j = F_s G_{j+k} - F_k G_{j+s}", {"j", "k", "s"}, true, 50},
        {CrossTerm, "CROSS_TERM", "2F_s F_k G_{j+k} G_{j+s} = F_s^2 G_{j+k}^2 + F_k^2 G_{j+s}^2 - F_{s-k}^2 G_j^2",
         {"j", "k", "s"}, true, 50},
        {MultFormula, "MULT_FORMULA", "5F_m F_n = L_{m+n} - (-1)^n L_{m-n}", {"m", "n"}, false, 50},
        {Sq3Term, "SQ_3TERM", "G_{j+k}^2 = F_{k+1} F_{k-1} G_j^2 + F_{k+1} F_k G_{j+1}^2 - F_{k-1} F_k G_{j-1}^2",
         {"j", "k"}, true, 50},
        {CassiniProd, "CASSINI_PROD", "F_j F_{j-1} = F_j^2 - F_{j-1}^2 + (-1)^j", {"j"}, false, 50},
        {SpreadLk, "SPREAD_LK", "L_k G_j = G_{j+k} + (-1)^k G_{j-k}", {"j", "k"}, true, 50},
        {SpreadLkSq, "SPREAD_LK_SQ", "L_k^2 G_j^2 = G_{j+k}^2 + G_{j-k}^2 + 2(-1)^k G_{j+k} G_{j-k}", {"j", "k"},
         true, 50},
        {F2kComb, "F2K_COMB", "F_{2k} G_{j+r} = F_{r+k} G_{j+k} - F_{r-k} G_{j-k}", {"j", "k", "r"}, true, 50},
        {NegIndex, "NEG_INDEX", "G_{-j} = (-1)^j (G_0 L_j - G_j)", {"j"}, true, 50},
    };
}

} // namespace

const std::vector<IdentityInfo>& identity_catalog()
{
    static const std::vector<IdentityInfo> catalog = build_catalog();
    return catalog;
}

const IdentityInfo& identity_info(IdentityId id)
{
    for (const auto& info : identity_catalog())
        if (info.id == id)
            return info;
    throw UnknownIdentity("identity id out of range");
}

IdentityId identity_from_tag(std::string_view tag)
{
    for (const auto& info : identity_catalog())
        if (info.tag == tag)
            return info.id;
    throw UnknownIdentity("unknown identity '" + std::string(tag) + "'");
}

MainIdentityTerms main_identity_terms(Index j, Index k, Index m, Index s)
{
    const BigInt fs = fib(s), fk = fib(k), fm = fib(m);
    const BigInt fms = fib(m - s), fmk = fib(m - k), fsk = fib(s - k);
    const int sign = neg_one_pow(s + k);
    return {
        {fs * fm * fms, j + k},
        {{{fms * fmk * fsk, j}, {sign * fk * fm * fmk, j + s}, {-sign * fk * fs * fsk, j + m}}},
    };
}

BigInt residual_main(const SequenceSpec& spec, Index j, Index k, Index m, Index s)
{
    return main_residual_with([&](Index i) { return g_at(spec, i); }, j, k, m, s);
}

BigInt residual_catalog(IdentityId id, const SequenceSpec& spec, std::span<const Index> params)
{
    const auto& info = identity_info(id);
    if (params.size() != info.params.size())
        throw ArityMismatch(std::string(info.tag) + " expects " + std::to_string(info.params.size()) +
                            " parameters, got " + std::to_string(params.size()));
    auto fast = [&](Index i) { return g_at(spec, i); };
    auto swept = [&](Index i) { return g_range(spec, i, i).front(); };
    return residual_with(id, spec, fast, swept, params);
}

IdentityReport fuzz_identity(IdentityId id, std::span<const SequenceSpec> specs, std::vector<Axis> grid,
                             const SweepOptions& options)
{
    const auto& info = identity_info(id);
    if (grid.empty())
        for (auto name : info.params)
            grid.push_back(Axis::symmetric(std::string(name), info.radius));
    if (grid.size() != info.params.size())
        throw ArityMismatch(std::string(info.tag) + ": grid has wrong number of axes");

    // Largest |index| any identity reaches is a small multiple of the radius.
    Index reach = 0;
    for (const auto& axis : grid)
        for (const auto& v : axis.values)
            reach = std::max<Index>(reach, std::abs(numerator(v).convert_to<Index>()));
    reach = 3 * reach + 4;

    std::vector<SequenceWindow> windows;
    const auto effective = info.uses_spec ? specs : std::span<const SequenceSpec>{};
    for (const auto& spec : effective)
        windows.emplace_back(spec, -reach, reach);

    auto fn = [&](const SequenceSpec& spec, std::span<const BigRat> values) {
        Index p[4];
        for (std::size_t i = 0; i < values.size(); ++i)
            p[i] = numerator(values[i]).convert_to<Index>();
        const SequenceWindow* window = nullptr;
        for (const auto& w : windows)
            if (w.spec() == spec)
                window = &w;
        CaseOutcome out;
        if (window)
            out.residual = BigRat(residual_with(id, spec, *window, *window, std::span<const Index>(p, values.size())));
        else
            out.residual = BigRat(residual_catalog(id, spec, std::span<const Index>(p, values.size())));
        return out;
    };
    return sweep(std::string(info.tag), effective, grid, fn, options);
}

} // namespace fiblike
