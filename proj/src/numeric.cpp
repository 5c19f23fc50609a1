#include "fiblike/numeric.hpp"

#include <cctype>

namespace fiblike {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

BigInt parse_integer(std::string_view text)
{
    if (!is_integer_literal(text))
        throw ParseError("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+')
        text.remove_prefix(1);
    return BigInt(std::string(text));
}

BigRat parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRat(parse_integer(text));
    auto num_text = text.substr(0, slash);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
    BigInt num = parse_integer(num_text);
    BigInt den = parse_integer(den_text);
    if (den == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    return BigRat(num, den);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& v)
{
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

BigInt pow(const BigInt& base, std::uint64_t exp)
{
    BigInt result = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1)
            result *= b;
        exp >>= 1;
        if (exp)
            b *= b;
    }
    return result;
}

BigRat pow(const BigRat& base, std::uint64_t exp)
{
    return BigRat(pow(numerator(base), exp), pow(denominator(base), exp));
}

} // namespace fiblike
