#include "fiblike/suites.hpp"

#include <chrono>
#include <functional>

#include "fiblike/binomial.hpp"
#include "fiblike/identities.hpp"
#include "fiblike/summation.hpp"

namespace fiblike {

namespace {

using Task = std::function<IdentityReport()>;

Index as_index(const BigRat& v) { return numerator(v).convert_to<Index>(); }

Axis values_axis(std::string name, const std::vector<BigRat>& values) { return {std::move(name), values}; }

Axis lengths_axis(const std::vector<Index>& lengths)
{
    Axis axis{"n", {}};
    for (Index n : lengths)
        axis.values.emplace_back(n);
    return axis;
}

Axis nonzero_axis(std::string name, Index radius)
{
    Axis axis{std::move(name), {}};
    for (Index v = -radius; v <= radius; ++v)
        if (v != 0)
            axis.values.emplace_back(v);
    return axis;
}

CaseOutcome diff(const BigRat& closed, const BigRat& brute) { return {closed - brute, false}; }

/// First nonzero difference of a list of (closed, brute) pairs.
CaseOutcome first_mismatch(std::initializer_list<std::pair<BigRat, BigRat>> pairs)
{
    for (const auto& [closed, brute] : pairs)
        if (closed != brute)
            return {closed - brute, false};
    return {};
}

std::vector<Task> sum_tasks(std::span<const SequenceSpec> specs, Index shift, const std::vector<BigRat>& weights,
                            const std::vector<Index>& lengths, const SweepOptions& opt)
{
    const Axis ks = Axis::symmetric("k", shift);
    const Axis xs = values_axis("x", weights);
    const Axis ns = lengths_axis(lengths);
    std::vector<Task> tasks;

    tasks.push_back([=] {
        return sweep("SUM_SQ_CLOSED", specs, {ks, xs, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const WeightedSumQuery q{g, as_index(v[0]), v[1], as_index(v[2])};
            return diff(sum_sq_closed(q), sum_sq_brute(q));
        }, opt);
    });
    tasks.push_back([=] {
        return sweep("SUM_SQ_INITFREE", specs, {ks, xs, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const WeightedSumQuery q{g, as_index(v[0]), v[1], as_index(v[2])};
            return diff(sum_sq_initfree(q), sum_sq_brute(q));
        }, opt);
    });
    tasks.push_back([=] {
        return sweep("SUM_F_SQ_CLOSED", {}, {xs, ns}, [](const SequenceSpec&, std::span<const BigRat> v) {
            const Index n = as_index(v[1]);
            return diff(sum_F_sq_closed(v[0], n), sum_sq_brute({SequenceSpec::fibonacci(), 0, v[0], n}));
        }, opt);
    });
    tasks.push_back([=] {
        const Axis kz = nonzero_axis("k", shift), sz = nonzero_axis("s", shift);
        return sweep("SUM_PRODUCT_CLOSED", specs, {kz, sz, xs, ns},
                     [](const SequenceSpec& g, std::span<const BigRat> v) {
                         const Index k = as_index(v[0]), s = as_index(v[1]), n = as_index(v[3]);
                         return diff(sum_product_closed(g, k, s, v[2], n), sum_product_brute(g, k, s, v[2], n));
                     }, opt);
    });
    tasks.push_back([=] {
        return sweep("COROLLARY_PRODUCT_SUMS", specs, {xs, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const Index n = as_index(v[1]);
            const auto closed = corollary_product_sums(g, v[0], n);
            const auto brute = corollary_product_brute(g, v[0], n);
            return first_mismatch({{closed.shifted, brute.shifted}, {closed.adjacent, brute.adjacent}});
        }, opt);
    });
    tasks.push_back([=] {
        return sweep("SPREAD_PRODUCT_CLOSED", specs, {ks, xs, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const Index k = as_index(v[0]), n = as_index(v[2]);
            return diff(spread_product_closed(g, k, v[1], n), sum_product_brute(g, k, -k, v[1], n));
        }, opt);
    });
    tasks.push_back([=] {
        return sweep("UNIT_SUM_SPECIALS", specs, {ks, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const Index k = as_index(v[0]), n = as_index(v[1]);
            const auto u = unit_sum_specials(g, k, n);
            const SequenceSpec f = SequenceSpec::fibonacci();
            const BigRat brute = sum_sq_brute({g, k, 1, n});
            const BigRat even = sum_sq_brute({g, k, 1, 2 * n});
            const BigRat fib_brute = sum_sq_brute({f, k, 1, n});
            const BigRat fib_even = sum_sq_brute({f, k, 1, 2 * n});
            auto outcome = first_mismatch({{BigRat(u.initial_form), brute},
                                           {BigRat(u.shifted_form), brute},
                                           {BigRat(u.even_prefix), even},
                                           {BigRat(u.fib_sum), fib_brute},
                                           {BigRat(u.fib_even_prefix), fib_even}});
            if (outcome.residual == 0 && n >= 1)
                outcome = first_mismatch({{BigRat(*u.odd_prefix), sum_sq_brute({g, k, 1, 2 * n - 1})},
                                          {BigRat(*u.fib_odd_prefix), sum_sq_brute({f, k, 1, 2 * n - 1})}});
            return outcome;
        }, opt);
    });
    tasks.push_back([=] {
        const Axis kz = nonzero_axis("k", shift), sz = nonzero_axis("s", shift);
        return sweep("PRODUCT_UNIT_FORMS", specs, {kz, sz, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const Index k = as_index(v[0]), s = as_index(v[1]), n = as_index(v[2]);
            const BigRat scale = 2 * BigRat(fib(s) * fib(k));
            const BigRat brute = scale * sum_product_brute(g, k, s, 1, n);
            auto outcome = first_mismatch({{BigRat(product_unit_split(g, k, s, n)), brute},
                                           {BigRat(product_unit_shifted(g, k, s, n)), brute},
                                           {BigRat(product_unit_even(g, k, s, n)),
                                            scale * sum_product_brute(g, k, s, 1, 2 * n)}});
            if (outcome.residual == 0 && n >= 1)
                outcome = first_mismatch({{BigRat(product_unit_odd(g, k, s, n)),
                                           scale * sum_product_brute(g, k, s, 1, 2 * n - 1)}});
            return outcome;
        }, opt);
    });
    tasks.push_back([=] {
        return sweep("SPREAD_PRODUCT_UNIT", specs, {ks, ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const Index k = as_index(v[0]), n = as_index(v[1]);
            return diff(BigRat(spread_product_unit(g, k, n)), neg_one_pow(k) * 2 * sum_product_brute(g, k, -k, 1, n));
        }, opt);
    });
    tasks.push_back([=] {
        return sweep("COROLLARY_UNIT", specs, {ns}, [](const SequenceSpec& g, std::span<const BigRat> v) {
            const Index n = as_index(v[0]);
            const auto u = corollary_unit(g, n);
            const auto brute = corollary_product_brute(g, 1, n);
            return first_mismatch({{BigRat(u.shifted), brute.shifted},
                                   {BigRat(u.adjacent_doubled), 2 * brute.adjacent}});
        }, opt);
    });
    return tasks;
}

struct OracleEntry {
    SequenceSpec spec;
    SequenceOracle squares;
    std::shared_ptr<SequenceWindow> window;
};

std::vector<Task> binomial_tasks(std::span<const SequenceSpec> specs, const BinomialGrid& grid,
                                 const SweepOptions& opt)
{
    const Index reach = grid.r_radius + 6 * grid.triple_radius * (grid.n_max + 1) + 4;
    auto entries = std::make_shared<std::vector<OracleEntry>>();
    for (const auto& spec : specs)
        entries->push_back({spec, squares_oracle(spec, -reach, reach),
                            std::make_shared<SequenceWindow>(spec, -reach, reach)});
    auto lookup = [entries](const SequenceSpec& spec) -> const OracleEntry& {
        for (const auto& e : *entries)
            if (e.spec == spec)
                return e;
        throw InvalidSpec("no oracle prepared for this spec");
    };
    const std::vector<Axis> axes{Axis::symmetric("s", grid.triple_radius), Axis::symmetric("k", grid.triple_radius),
                                 Axis::symmetric("m", grid.triple_radius), Axis::symmetric("r", grid.r_radius),
                                 Axis::range("n", 0, grid.n_max)};

    std::vector<Task> tasks;
    for (int variant = 1; variant <= 6; ++variant) {
        tasks.push_back([=] {
            return sweep("LEMMA5_V" + std::to_string(variant), specs, axes,
                         [&](const SequenceSpec& g, std::span<const BigRat> v) {
                             const Index s = as_index(v[0]), k = as_index(v[1]), m = as_index(v[2]);
                             const Index r = as_index(v[3]), n = as_index(v[4]);
                             const auto rec = squares_four_term(s, k, m);
                             const bool ok = theorem7_nondegenerate(s, k, m);
                             const auto& oracle = lookup(g).squares;
                             const auto sides = ok ? lemma5_sides(rec, oracle, variant, r, n)
                                                   : lemma5_sides_unchecked(rec, oracle, variant, r, n);
                             return CaseOutcome{sides.residual(), !ok};
                         }, opt);
        });
    }
    for (int which = 1; which <= 3; ++which) {
        tasks.push_back([=] {
            return sweep("THEOREM7_" + std::to_string(which), specs, axes,
                         [&](const SequenceSpec& g, std::span<const BigRat> v) {
                             const Index s = as_index(v[0]), k = as_index(v[1]), m = as_index(v[2]);
                             const Index r = as_index(v[3]), n = as_index(v[4]);
                             const auto window = lookup(g).window;
                             const auto sides =
                                 theorem7_sides([&](Index i) { return (*window)(i); }, which, n, s, k, m, r);
                             return CaseOutcome{sides.residual(), !theorem7_nondegenerate(s, k, m)};
                         }, opt);
        });
    }
    return tasks;
}

std::vector<Task> lemma1_tasks(std::span<const SequenceSpec> specs, const std::vector<BigRat>& weights,
                               const std::vector<Index>& lengths, const SweepOptions& opt)
{
    const Poly square_den{1, -2, -2, 1};
    std::vector<BigRat> regular;
    for (const auto& x : weights)
        if (square_den(x) != 0)
            regular.push_back(x);
    const Axis ns = lengths_axis(lengths);
    std::vector<Task> tasks;
    tasks.push_back([=] {
        return sweep("LEMMA1_SQUARES", specs, {values_axis("x", regular), ns},
                     [](const SequenceSpec& g, std::span<const BigRat> v) {
                         const Index n = as_index(v[1]);
                         const auto oracle = squares_oracle(g, -4, n + 4);
                         return diff(lemma1_partial_sum(squares_linear_recurrence(), oracle, v[0], n),
                                     weighted_sum_brute(oracle, v[0], n));
                     }, opt);
    });
    tasks.push_back([=] {
        return sweep("LEMMA1_FIBONACCI", {}, {values_axis("x", weights), ns},
                     [](const SequenceSpec&, std::span<const BigRat> v) {
                         const Index n = as_index(v[1]);
                         const SequenceOracle oracle = [](Index j) { return fib(j); };
                         return diff(lemma1_partial_sum({{1, 1}, {1, 2}}, oracle, v[0], n),
                                     weighted_sum_brute(oracle, v[0], n));
                     }, opt);
    });
    return tasks;
}

std::vector<IdentityReport> run_all(const std::vector<Task>& tasks)
{
    std::vector<IdentityReport> out;
    for (const auto& t : tasks)
        out.push_back(t());
    return out;
}

} // namespace

Family family_from_name(std::string_view name)
{
    if (name == "main")
        return Family::Main;
    if (name == "catalog")
        return Family::Catalog;
    if (name == "sums")
        return Family::Sums;
    if (name == "gf")
        return Family::Gf;
    if (name == "binomial")
        return Family::Binomial;
    if (name == "all")
        return Family::All;
    throw ParseError("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::Main: return "main";
    case Family::Catalog: return "catalog";
    case Family::Sums: return "sums";
    case Family::Gf: return "gf";
    case Family::Binomial: return "binomial";
    case Family::All: return "all";
    }
    return "?";
}

std::vector<SequenceSpec> identity_specs() { return {{0, 1}, {2, 1}, {1, 1}, {3, -5}}; }

std::vector<SequenceSpec> sum_specs() { return {{0, 1}, {2, 1}, {1, 1}, {1, 0}, {3, -5}, {-2, 7}}; }

std::vector<BigRat> standard_weights()
{
    return {0, 1, -1, 2, -2, BigRat(1, 2), BigRat(-1, 3), BigRat(3, 7), BigRat(-7, 2)};
}

std::vector<Index> standard_lengths() { return {0, 1, 2, 3, 5, 10, 37, 100}; }

IdentityReport main_suite(std::span<const SequenceSpec> specs, Index radius, const SweepOptions& opt)
{
    return fuzz_identity(IdentityId::Main, specs,
                         {Axis::symmetric("j", radius), Axis::symmetric("k", radius), Axis::symmetric("m", radius),
                          Axis::symmetric("s", radius)},
                         opt);
}

std::vector<IdentityReport> sum_suites(std::span<const SequenceSpec> specs, Index shift,
                                       const std::vector<BigRat>& weights, const std::vector<Index>& lengths,
                                       const SweepOptions& opt)
{
    return run_all(sum_tasks(specs, shift, weights, lengths, opt));
}

IdentityReport alternating_fib_square_suite(Index n_max)
{
    return sweep("SUM_F_SQ_ALTERNATING", {}, {Axis::range("n", 0, n_max)},
                 [](const SequenceSpec&, std::span<const BigRat> v) {
                     const Index n = as_index(v[0]);
                     return diff(sum_F_sq_closed(-1, n), sum_sq_brute({SequenceSpec::fibonacci(), 0, -1, n}));
                 });
}

IdentityReport gf_spread_suite(std::span<const SequenceSpec> specs, Index radius, std::size_t order)
{
    IdentityReport merged;
    merged.identity = "GF_SPREAD_PRODUCT";
    merged.param_names = {"g0", "g1", "k", "t"};
    for (const auto& spec : specs)
        for (Index k = -radius; k <= radius; ++k) {
            auto r = gf_spread_product_check(spec, k, order);
            merged.checked += r.checked;
            for (auto& f : r.failures)
                merged.failures.push_back(std::move(f));
        }
    std::sort(merged.failures.begin(), merged.failures.end(),
              [](const CaseRecord& a, const CaseRecord& b) { return params_less(a.params, b.params); });
    return merged;
}

std::vector<IdentityReport> binomial_suites(std::span<const SequenceSpec> specs, const BinomialGrid& grid,
                                            const SweepOptions& opt)
{
    return run_all(binomial_tasks(specs, grid, opt));
}

std::vector<IdentityReport> lemma1_suites(std::span<const SequenceSpec> specs, const std::vector<BigRat>& weights,
                                          const std::vector<Index>& lengths, const SweepOptions& opt)
{
    return run_all(lemma1_tasks(specs, weights, lengths, opt));
}

std::vector<SuiteResult> run_family(Family family, const SuiteConfig& config)
{
    // Spec lists must outlive the tasks that capture spans of them.
    static const std::vector<SequenceSpec> ids = identity_specs();
    static const std::vector<SequenceSpec> sums = sum_specs();
    const auto& opt = config.sweep;
    const Index radius = std::max<Index>(config.range, 0);

    std::vector<Task> tasks;
    const bool all = family == Family::All;
    if (all || family == Family::Main)
        tasks.push_back([&] { return main_suite(ids, radius, opt); });
    if (all || family == Family::Catalog) {
        for (const auto& info : identity_catalog()) {
            if (info.id == IdentityId::Main)
                continue;
            tasks.push_back([&info, &opt, radius] {
                std::vector<Axis> grid;
                for (auto name : info.params)
                    grid.push_back(Axis::symmetric(std::string(name), std::min(radius, info.radius)));
                return fuzz_identity(info.id, ids, grid, opt);
            });
        }
    }
    if (all || family == Family::Sums) {
        std::vector<Index> lengths;
        for (Index n : standard_lengths())
            if (n <= config.n_max)
                lengths.push_back(n);
        for (auto& t : sum_tasks(sums, radius, standard_weights(), lengths, opt))
            tasks.push_back(std::move(t));
        tasks.push_back([&] { return alternating_fib_square_suite(std::max<Index>(config.n_max, 0)); });
    }
    if (all || family == Family::Gf) {
        tasks.push_back([&] { return gf_fib_square_check(config.order); });
        tasks.push_back([&] { return gf_spread_suite(sums, radius, config.order); });
    }
    if (all || family == Family::Binomial) {
        std::vector<Index> lengths;
        for (Index n = 0; n <= std::min<Index>(config.n_max, 20); ++n)
            lengths.push_back(n);
        for (auto& t : lemma1_tasks(ids, standard_weights(), lengths, opt))
            tasks.push_back(std::move(t));
        const BinomialGrid grid{std::min<Index>(radius, 4), radius, std::min<Index>(radius, 5)};
        for (auto& t : binomial_tasks(ids, grid, opt))
            tasks.push_back(std::move(t));
    }

    std::vector<SuiteResult> results;
    for (const auto& task : tasks) {
        const auto start = std::chrono::steady_clock::now();
        IdentityReport report = task();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        results.push_back({std::move(report), elapsed.count()});
    }
    return results;
}

} // namespace fiblike
