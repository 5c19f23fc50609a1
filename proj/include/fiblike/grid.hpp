#pragma once

// Cartesian-grid sweeps with a deterministic, worker-count independent result.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiblike/report.hpp"
#include "fiblike/sequence.hpp"

namespace fiblike {

struct Axis {
    std::string name;
    std::vector<BigRat> values;

    /// Integer axis lo..hi inclusive.
    static Axis range(std::string name, Index lo, Index hi);
    static Axis symmetric(std::string name, Index radius) { return range(std::move(name), -radius, radius); }
};

struct CaseOutcome {
    BigRat residual;
    bool degenerate = false;
};

/// Called once per grid point with the spec and the axis values in order.
using CaseFn = std::function<CaseOutcome(const SequenceSpec&, std::span<const BigRat>)>;

struct SweepOptions {
    unsigned workers = 1;
    /// When set, evaluate only this many grid points drawn with `seed`.
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
};

/// Evaluates `fn` over specs x axes. Records carry (g0, g1, axis values...)
/// when `specs` is non-empty, otherwise only the axis values (one pass with
/// a placeholder Fibonacci spec). Records are sorted lexicographically.
IdentityReport sweep(std::string identity, std::span<const SequenceSpec> specs, const std::vector<Axis>& axes,
                     const CaseFn& fn, const SweepOptions& options = {});

/// Runs `body(i)` for i in [0, count) across `workers` threads.
void parallel_for(std::uint64_t count, unsigned workers, const std::function<void(std::uint64_t)>& body);

/// FIBLIKE_WORKERS if set and valid, else `fallback`.
unsigned workers_from_env(unsigned fallback);

} // namespace fiblike
