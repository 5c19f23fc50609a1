#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiblike/numeric.hpp"

namespace fiblike {

/// One evaluated parameter tuple and its residual (LHS - RHS).
struct CaseRecord {
    std::vector<BigRat> params;
    BigRat residual;

    friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

/// Outcome of sweeping one identity over a grid.
///
/// `checked` counts the non-degenerate tuples; degenerate tuples are
/// evaluated too and kept (with their residuals) in `degenerate`.
struct IdentityReport {
    std::string identity;
    std::vector<std::string> param_names;
    std::uint64_t checked = 0;
    std::vector<CaseRecord> failures;
    std::vector<CaseRecord> degenerate;

    bool passed() const noexcept { return failures.empty(); }
    std::uint64_t degenerate_failures() const noexcept;

    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Lexicographic order on the numeric parameter tuple.
bool params_less(const std::vector<BigRat>& a, const std::vector<BigRat>& b);

} // namespace fiblike
