#pragma once

// Named verification suites grouped into families, shared by the CLI and the
// acceptance tests.

#include <string_view>
#include <vector>

#include "fiblike/grid.hpp"

namespace fiblike {

enum class Family { Main, Catalog, Sums, Gf, Binomial, All };

Family family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// (0,1), (2,1), (1,1), (3,-5)
std::vector<SequenceSpec> identity_specs();
/// identity_specs() plus (1,0) and (-2,7)
std::vector<SequenceSpec> sum_specs();
/// 0, 1, -1, 2, -2, 1/2, -1/3, 3/7, -7/2
std::vector<BigRat> standard_weights();
/// 0, 1, 2, 3, 5, 10, 37, 100
std::vector<Index> standard_lengths();

struct SuiteConfig {
    /// Index radius for identity parameters and sum shifts.
    Index range = 4;
    /// Largest upper limit taken from standard_lengths().
    Index n_max = 100;
    /// Series order for generating-function checks.
    std::size_t order = 32;
    SweepOptions sweep;
};

struct SuiteResult {
    IdentityReport report;
    double seconds = 0;
};

std::vector<SuiteResult> run_family(Family family, const SuiteConfig& config);

// Individual suites, parameterised exactly by their grids.

IdentityReport main_suite(std::span<const SequenceSpec> specs, Index radius, const SweepOptions& opt = {});

/// Closed-form sums against direct summation. Shift axes are -shift..shift
/// (nonzero for product sums).
std::vector<IdentityReport> sum_suites(std::span<const SequenceSpec> specs, Index shift,
                                       const std::vector<BigRat>& weights, const std::vector<Index>& lengths,
                                       const SweepOptions& opt = {});

/// sum_{j=0}^{n} (-1)^j F_j^2 against its closed form for n = 0..n_max.
IdentityReport alternating_fib_square_suite(Index n_max);

/// Generating function of G_{j+k} G_{j-k}, |k| <= radius, merged into one report.
IdentityReport gf_spread_suite(std::span<const SequenceSpec> specs, Index radius, std::size_t order);

struct BinomialGrid {
    Index triple_radius = 4;  // s, k, m
    Index r_radius = 6;
    Index n_max = 5;
};
/// Four-term variants 1..6 then double binomial identities 1..3. Degenerate (s, k, m)
/// tuples are evaluated and kept in the degenerate bucket.
std::vector<IdentityReport> binomial_suites(std::span<const SequenceSpec> specs, const BinomialGrid& grid,
                                            const SweepOptions& opt = {});
/// Linear-recurrence partial sums against direct summation.
std::vector<IdentityReport> lemma1_suites(std::span<const SequenceSpec> specs, const std::vector<BigRat>& weights,
                                          const std::vector<Index>& lengths, const SweepOptions& opt = {});

} // namespace fiblike
