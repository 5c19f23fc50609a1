#pragma once

// Finite identities for squares of Fibonacci-like numbers, each evaluated as
// a residual LHS - RHS that must vanish.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fiblike/grid.hpp"
#include "fiblike/sequence.hpp"

namespace fiblike {

enum class IdentityId {
    Main,           // four-square relation in j, k, m, s
    BrousseauSq,
    ThreeSix,
    SixteenTwelve,
    FkShift,
    Addition3Term,
    M0Special,
    CrossTerm,
    MultFormula,
    Sq3Term,
    CassiniProd,
    SpreadLk,
    SpreadLkSq,
    F2kComb,
    NegIndex,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view tag;
    std::string_view statement;
    std::vector<std::string_view> params;
    bool uses_spec;
    /// Default fuzz radius: every parameter ranges over -radius..radius.
    Index radius;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
/// Throws UnknownIdentity for an unrecognised tag.
IdentityId identity_from_tag(std::string_view tag);

class UnknownIdentity : public Error {
public:
    using Error::Error;
};
class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// F_s F_m F_{m-s} G_{j+k}^2 = F_{m-s} F_{m-k} F_{s-k} G_j^2
///     + (-1)^{s+k} F_k F_m F_{m-k} G_{j+s}^2 - (-1)^{s+k} F_k F_s F_{s-k} G_{j+m}^2
/// as four (coefficient, index) terms: lhs, then the three right-hand terms.
struct SquareTerm {
    BigInt coefficient;
    Index index;
};
struct MainIdentityTerms {
    SquareTerm lhs;
    std::array<SquareTerm, 3> rhs;
};
MainIdentityTerms main_identity_terms(Index j, Index k, Index m, Index s);

BigInt residual_main(const SequenceSpec& spec, Index j, Index k, Index m, Index s);

/// Residual of a catalog identity; `params` follow identity_info(id).params.
BigInt residual_catalog(IdentityId id, const SequenceSpec& spec, std::span<const Index> params);

/// Exhaustive (or sampled) sweep of one identity. An empty grid means
/// the identity's default radius on every parameter.
IdentityReport fuzz_identity(IdentityId id, std::span<const SequenceSpec> specs, std::vector<Axis> grid = {},
                             const SweepOptions& options = {});

} // namespace fiblike
