#pragma once

// Exact integer and rational types shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace fiblike {

using BigInt = boost::multiprecision::mpz_int;
/// Always held in lowest terms with a positive denominator, so `==` is structural.
using BigRat = boost::multiprecision::mpq_rational;
using Index = std::int64_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};
class InvalidRange : public Error {
public:
    using Error::Error;
};
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parses "p/q", "-p/q" or a bare integer. Decimals are rejected.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

/// (-1)^e for any signed e.
constexpr int neg_one_pow(Index e) noexcept { return (e % 2 == 0) ? 1 : -1; }

BigInt pow(const BigInt& base, std::uint64_t exp);
/// x^e with 0^0 = 1.
BigRat pow(const BigRat& base, std::uint64_t exp);


} // namespace fiblike
