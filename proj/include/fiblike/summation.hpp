#pragma once

// Weighted partial sums of squares and products of Fibonacci-like numbers:
// closed forms evaluated in O(log n) multiplications, each paired with a
// direct O(n) summation.
//
// Every weight x is an exact rational; 0^0 = 1, so an x = 0 sum is its
// j = 0 term.

#include <optional>
#include <vector>

#include "fiblike/report.hpp"
#include "fiblike/sequence.hpp"

namespace fiblike {

class DegenerateFactor : public Error {
public:
    using Error::Error;
};
class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

/// sum_{j=0}^{n} x^j G_{j+k}^2
struct WeightedSumQuery {
    SequenceSpec spec;
    Index k = 0;
    BigRat x = 1;
    Index n = 0;
};

// --- direct summation -------------------------------------------------------

BigRat sum_sq_brute(const WeightedSumQuery& q);
/// sum_{j=0}^{n} x^j G_{j+k} G_{j+s}
BigRat sum_product_brute(const SequenceSpec& spec, Index k, Index s, const BigRat& x, Index n);

// --- closed forms -------------------------------------------------------------

/// sum_{j=0}^{n} x^j F_j^2; dispatches on x = 1 and x = -1.
BigRat sum_F_sq_closed(const BigRat& x, Index n);

/// sum_{j=0}^{n} x^j G_j^2 (the k = 0 case). Rational-function form for
/// x != -1, the initial-value-free form at x = -1.
BigRat sum_G_sq_closed(const SequenceSpec& spec, const BigRat& x, Index n);

/// A_n(x; k) from G_0, G_1 and the sequence tail; x = 1 uses the
/// unit-weight closed form, x = -1 routes to sum_sq_initfree.
BigRat sum_sq_closed(const WeightedSumQuery& q);

/// A_n(x; k) from G_k, G_{k+1} and Fibonacci sums only. The factor
/// (1 + (-1)^n x^{n+1}) / (1 + x) is evaluated as sum_{j=0}^{n} (-x)^j, which
/// is total in x.
BigRat sum_sq_initfree(const WeightedSumQuery& q);

/// sum x^j G_{j+k} G_{j+s}. Throws DegenerateFactor if k = 0 or s = 0.
BigRat sum_product_closed(const SequenceSpec& spec, Index k, Index s, const BigRat& x, Index n);

/// The two unit-weight (x = 1) evaluations of 2 F_s F_k sum G_{j+k} G_{j+s}:
/// via the G_0/G_1 form and via the G_k/G_{k+1} form. Both return the full
/// left-hand side including the 2 F_s F_k factor.
BigInt product_unit_split(const SequenceSpec& spec, Index k, Index s, Index n);
BigInt product_unit_shifted(const SequenceSpec& spec, Index k, Index s, Index n);
/// Same as product_unit_shifted summed to 2n-1 (n >= 1) and to 2n.
BigInt product_unit_odd(const SequenceSpec& spec, Index k, Index s, Index n);
BigInt product_unit_even(const SequenceSpec& spec, Index k, Index s, Index n);

struct CorollarySums {
    /// sum x^j G_{j+1} G_{j-2}
    BigRat shifted;
    /// sum x^j G_j G_{j-1}
    BigRat adjacent;

    friend bool operator==(const CorollarySums&, const CorollarySums&) = default;
};
CorollarySums corollary_product_sums(const SequenceSpec& spec, const BigRat& x, Index n);
CorollarySums corollary_product_brute(const SequenceSpec& spec, const BigRat& x, Index n);
/// Unit-weight forms; `adjacent` holds the doubled sum 2 sum G_j G_{j-1}.
struct CorollaryUnit {
    BigInt shifted;
    BigInt adjacent_doubled;
};
CorollaryUnit corollary_unit(const SequenceSpec& spec, Index n);

/// sum x^j G_{j+k} G_{j-k}
BigRat spread_product_closed(const SequenceSpec& spec, Index k, const BigRat& x, Index n);
/// (-1)^k 2 sum_{j=0}^{n} G_{j+k} G_{j-k}
BigInt spread_product_unit(const SequenceSpec& spec, Index k, Index n);

/// Closed forms of unit-weight square sums.
struct UnitSumSpecials {
    BigInt initial_form;                 // sum_{0}^{n} G_{j+k}^2 from G_0, G_1
    BigInt shifted_form;                 // same sum from G_{k-1}, G_k, G_{k+1}
    std::optional<BigInt> odd_prefix;    // sum_{0}^{2n-1} G_{j+k}^2, n >= 1
    BigInt even_prefix;                  // sum_{0}^{2n} G_{j+k}^2
    BigInt fib_sum;                      // sum_{0}^{n} F_{j+k}^2
    std::optional<BigInt> fib_odd_prefix;
    BigInt fib_even_prefix;
};
UnitSumSpecials unit_sum_specials(const SequenceSpec& spec, Index k, Index n);

// --- formal power series --------------------------------------------------------

/// Polynomial over the rationals; coefficient i multiplies x^i. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<BigRat> coeffs);
    explicit Poly(std::vector<BigRat> coeffs);

    const std::vector<BigRat>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return long(coeffs_.size()) - 1; }
    BigRat operator[](std::size_t i) const;
    BigRat operator()(const BigRat& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

/// First order+1 coefficients of a formal power series.
struct SeriesPrefix {
    std::vector<BigRat> coeffs;

    std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

/// The unique T with den * T = num mod x^{order+1}.
SeriesPrefix series_expand(const Poly& num, const Poly& den, std::size_t order);

/// Expansion of x(1-x)/(1-2x-2x^2+x^3) against F_j^2, j = 0..order.
IdentityReport gf_fib_square_check(std::size_t order);
/// Coefficientwise check of the generating function of
/// (-1)^k 2x sum x^j G_{j+k} G_{j-k} up to x^order.
IdentityReport gf_spread_product_check(const SequenceSpec& spec, Index k, std::size_t order);
/// Rational-function side of that identity (expansion plus the two
/// polynomial corrections), exposed for the CLI.
SeriesPrefix spread_product_series(const SequenceSpec& spec, Index k, std::size_t order);

} // namespace fiblike
