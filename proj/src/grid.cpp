#include "fiblike/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_set>

namespace fiblike {

Axis Axis::range(std::string name, Index lo, Index hi)
{
    if (lo > hi)
        throw InvalidRange("axis '" + name + "' has lo > hi");
    Axis axis{std::move(name), {}};
    axis.values.reserve(std::size_t(hi - lo + 1));
    for (Index v = lo; v <= hi; ++v)
        axis.values.emplace_back(v);
    return axis;
}

void parallel_for(std::uint64_t count, unsigned workers, const std::function<void(std::uint64_t)>& body)
{
    workers = std::max(1u, workers);
    if (workers == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::uint64_t i = begin; i < end; ++i)
                    body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

unsigned workers_from_env(unsigned fallback)
{
    const char* env = std::getenv("FIBLIKE_WORKERS");
    if (!env || !*env)
        return fallback;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024)
        return fallback;
    return unsigned(v);
}

IdentityReport sweep(std::string identity, std::span<const SequenceSpec> specs, const std::vector<Axis>& axes,
                     const CaseFn& fn, const SweepOptions& options)
{
    IdentityReport report;
    report.identity = std::move(identity);
    const bool with_spec = !specs.empty();
    if (with_spec) {
        report.param_names.push_back("g0");
        report.param_names.push_back("g1");
    }
    for (const auto& axis : axes)
        report.param_names.push_back(axis.name);

    static const SequenceSpec placeholder = SequenceSpec::fibonacci();
    const std::span<const SequenceSpec> spec_list = with_spec ? specs : std::span<const SequenceSpec>(&placeholder, 1);

    std::uint64_t per_spec = 1;
    for (const auto& axis : axes)
        per_spec *= axis.values.size();
    const std::uint64_t total = per_spec * spec_list.size();

    std::vector<std::uint64_t> points;
    if (options.sample && *options.sample < total) {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
        std::unordered_set<std::uint64_t> seen;
        while (seen.size() < *options.sample)
            seen.insert(pick(rng));
        points.assign(seen.begin(), seen.end());
        std::sort(points.begin(), points.end());
    }
    const std::uint64_t count = points.empty() ? total : points.size();

    // Only non-trivial outcomes are kept; everything else is a counted pass.
    std::vector<std::vector<std::pair<std::uint64_t, CaseOutcome>>> buckets(std::max(1u, options.workers));
    std::vector<std::uint64_t> checked(buckets.size(), 0);
    const std::uint64_t chunk = (count + buckets.size() - 1) / buckets.size();

    auto decode = [&](std::uint64_t flat, std::vector<BigRat>& values) -> const SequenceSpec& {
        // Assignment reuses the limbs already held by `values`.
        values.resize(axes.size());
        std::uint64_t rest = flat % per_spec;
        for (std::size_t a = axes.size(); a-- > 0;) {
            values[a] = axes[a].values[std::size_t(rest % axes[a].values.size())];
            rest /= axes[a].values.size();
        }
        return spec_list[std::size_t(flat / per_spec)];
    };

    parallel_for(buckets.size(), unsigned(buckets.size()), [&](std::uint64_t w) {
        std::vector<BigRat> values;
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(count, begin + chunk);
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t flat = points.empty() ? i : points[i];
            const SequenceSpec& spec = decode(flat, values);
            CaseOutcome outcome = fn(spec, values);
            if (!outcome.degenerate)
                ++checked[w];
            if (outcome.degenerate || outcome.residual != 0)
                buckets[w].emplace_back(flat, std::move(outcome));
        }
    });

    for (std::size_t w = 0; w < buckets.size(); ++w) {
        report.checked += checked[w];
        for (auto& [flat, outcome] : buckets[w]) {
            std::vector<BigRat> values;
            const SequenceSpec& spec = decode(flat, values);
            CaseRecord record;
            if (with_spec) {
                record.params.emplace_back(spec.g0());
                record.params.emplace_back(spec.g1());
            }
            record.params.insert(record.params.end(), values.begin(), values.end());
            record.residual = std::move(outcome.residual);
            (outcome.degenerate ? report.degenerate : report.failures).push_back(std::move(record));
        }
    }
    auto by_params = [](const CaseRecord& a, const CaseRecord& b) { return params_less(a.params, b.params); };
    std::sort(report.failures.begin(), report.failures.end(), by_params);
    std::sort(report.degenerate.begin(), report.degenerate.end(), by_params);
    return report;
}

} // namespace fiblike
