#pragma once

// Partial sums of sequences obeying a linear recurrence, and double binomial
// identities for sequences obeying a four-term recurrence.

#include <functional>
#include <vector>

#include "fiblike/sequence.hpp"

namespace fiblike {

class InvalidDescriptor : public Error {
public:
    using Error::Error;
};
class SingularDenominator : public Error {
public:
    using Error::Error;
};
class OracleMismatch : public Error {
public:
    using Error::Error;
};

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(Index n, Index k);

/// X_j = sum_m coeffs[m] X_{j - gaps[m]}, coefficients nonzero, gaps >= 1 and distinct.
struct LinearRecurrence {
    std::vector<BigRat> coeffs;
    std::vector<Index> gaps;

    void validate() const;
};

/// h X_r = f1 X_{r-a} + f2 X_{r-b} + f3 X_{r-c}, with h and the f's nonzero
/// and a, b, c distinct.
struct FourTermRecurrence {
    BigRat h, f1, f2, f3;
    Index a = 0, b = 0, c = 0;

    void validate() const;
};

/// j -> X_j for any signed j.
using SequenceOracle = std::function<BigInt(Index)>;

/// X_j = G_j^2, tabulated over [lo, hi] and falling back to g_at outside.
SequenceOracle squares_oracle(const SequenceSpec& spec, Index lo = -64, Index hi = 64);

/// X_j = G_j^2 obeys X_j = 2X_{j-1} + 2X_{j-2} - X_{j-3}.
LinearRecurrence squares_linear_recurrence();

/// The four-square relation rewritten with r in place of j:
/// F_{m-s}F_{m-k}F_{s-k} X_r = (-1)^{s+k}F_kF_sF_{s-k} X_{r+m}
///     + (-1)^{s+k+1}F_kF_mF_{m-k} X_{r+s} + F_sF_mF_{m-s} X_{r+k}
/// with a = -m, b = -s, c = -k. Coefficients are not validated here.
FourTermRecurrence squares_four_term(Index s, Index k, Index m);

/// sum_{j=0}^{n} x^j X_j through the recurrence: only the c_m values below
/// zero and the top c_m values up to n are read. Throws SingularDenominator
/// when 1 - sum_m x^{c_m} f_m = 0.
BigRat lemma1_partial_sum(const LinearRecurrence& rec, const SequenceOracle& oracle, const BigRat& x, Index n);
/// Direct sum_{j=0}^{n} x^j X_j.
BigRat weighted_sum_brute(const SequenceOracle& oracle, const BigRat& x, Index n);

struct SumSides {
    BigRat lhs;
    BigRat rhs;

    BigRat residual() const { return lhs - rhs; }
};

/// Variant v in 1..6 of the double binomial identities. The oracle is checked
/// against the recurrence at every index the double sum reads (OracleMismatch).
SumSides lemma5_sides(const FourTermRecurrence& rec, const SequenceOracle& oracle, int variant, Index r, Index n);
BigRat lemma5_residual(const FourTermRecurrence& rec, const SequenceOracle& oracle, int variant, Index r, Index n);
/// lemma5_sides without the nonvanishing/distinct-gap checks, for reporting
/// degenerate descriptors. The oracle is still checked.
SumSides lemma5_sides_unchecked(const FourTermRecurrence& rec, const SequenceOracle& oracle, int variant, Index r,
                                Index n);

/// s, k, m pairwise distinct and nonzero, so every Fibonacci factor of the
/// four-square relation is nonzero.
bool theorem7_nondegenerate(Index s, Index k, Index m);

/// The three double binomial identities for G^2 (which in 1..3). Defined
/// for every tuple; evaluated directly without a recurrence descriptor.
SumSides theorem7_sides(const SequenceSpec& spec, int which, Index n, Index s, Index k, Index m, Index r);
BigInt theorem7_residual(const SequenceSpec& spec, int which, Index n, Index s, Index k, Index m, Index r);
/// Same as theorem7_sides with an explicit sequence accessor.
SumSides theorem7_sides(const std::function<BigInt(Index)>& g, int which, Index n, Index s, Index k, Index m,
                        Index r);

/// Third identity with the printed Fibonacci powers F_s^{n+j-i} F_k^i F_m^{n+j}
/// F_{m-s}^{n+j-i} F_{m-k}^i and no F_{s-k} factor. Kept to document that it
/// does not vanish; theorem7_residual(which = 3) uses the form obtained from
/// the four-term recurrence.
BigInt theorem7_printed_residual(const SequenceSpec& spec, Index n, Index s, Index k, Index m, Index r);

/// Sign relating double binomial identity `which` to four-term variant `which` under
/// squares_four_term: double binomial sides = sign * four-term sides.
int theorem7_lemma_sign(int which, Index n, Index s, Index k);

} // namespace fiblike
