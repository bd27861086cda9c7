#ifndef WVG_NUMERIC_HPP
#define WVG_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "wvg/error.hpp"

namespace wvg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Voting weights and quotas are exact nonnegative rationals.
using Weight = Rational;

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

/// floor(a / b) for b > 0. cpp_int division truncates toward zero.
inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Exact ceiling of a rational, computed on its numerator and denominator.
inline BigInt ceil(const Rational& x) { return ceil_div(numerator_of(x), denominator_of(x)); }
inline BigInt floor(const Rational& x) { return floor_div(numerator_of(x), denominator_of(x)); }

inline BigInt pow2(std::size_t e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

inline BigInt ipow(const BigInt& base, std::size_t e)
{
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline bool fits_int64(const BigInt& x)
{
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

template <class T>
T narrow(const BigInt& x);

template <>
inline std::int64_t narrow<std::int64_t>(const BigInt& x)
{
    return x.convert_to<std::int64_t>();
}

template <>
inline BigInt narrow<BigInt>(const BigInt& x)
{
    return x;
}

inline BigInt to_bigint(const BigInt& x) { return x; }
inline BigInt to_bigint(std::uint64_t x) { return BigInt(x); }
inline BigInt to_bigint(std::int64_t x) { return BigInt(x); }
inline BigInt to_bigint(unsigned __int128 x)
{
    BigInt hi(static_cast<std::uint64_t>(x >> 64));
    return (hi << 64) | BigInt(static_cast<std::uint64_t>(x));
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// Rationals serialize as "numerator/denominator", always with both parts.
inline std::string to_fraction_string(const Rational& x)
{
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

/// Exact decimal rendering; empty when the expansion does not terminate.
inline std::optional<std::string> to_exact_decimal(const Rational& x)
{
    BigInt den = denominator_of(x);
    std::size_t twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1)
        return std::nullopt;
    std::size_t digits = std::max(twos, fives);
    BigInt num = numerator_of(x);
    if (digits == 0)
        return num.str();
    bool negative = num < 0;
    if (negative)
        num = -num;
    BigInt scaled = num * ipow(10, digits) / denominator_of(x);
    std::string s = scaled.str();
    if (s.size() <= digits)
        s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    return negative ? "-" + s : s;
}

/// Fixed-point approximation with `digits` decimals, rounded half away from zero.
/// Integer arithmetic only.
inline std::string to_fixed(const Rational& x, std::size_t digits)
{
    BigInt num = numerator_of(x);
    const BigInt den = denominator_of(x);
    bool negative = num < 0;
    if (negative)
        num = -num;
    BigInt scaled = num * ipow(10, digits);
    BigInt q = scaled / den;
    if ((scaled % den) * 2 >= den)
        ++q;
    std::string s = q.str();
    if (digits > 0) {
        if (s.size() <= digits)
            s.insert(0, digits - s.size() + 1, '0');
        s.insert(s.size() - digits, ".");
    }
    return (negative && q != 0) ? "-" + s : s;
}

/// Parses an exact decimal or integer numeral ("12", "-3", "0.125").
/// Throws invalid_game on anything else.
inline Rational parse_decimal(std::string_view text)
{
    auto fail = [&]() -> Rational {
        throw invalid_game("malformed numeral '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_dot = false;
    bool int_digit = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot)
                ++frac_digits;
            else
                int_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            return fail();
        }
    }
    if (!int_digit || (seen_dot && frac_digits == 0))
        return fail();
    // cpp_int reads a leading 0 as an octal prefix
    const auto first = digits.find_first_not_of('0');
    const BigInt num(first == std::string::npos ? std::string("0") : digits.substr(first));
    Rational r(num, ipow(10, frac_digits));
    return negative ? Rational(-r) : r;
}

namespace detail {

/// Clamps a possibly huge index into [lo, hi] before narrowing.
inline std::int64_t clamp_index(const BigInt& x, std::int64_t lo, std::int64_t hi)
{
    if (x < lo)
        return lo;
    if (x > hi)
        return hi;
    return x.convert_to<std::int64_t>();
}

} // namespace detail

} // namespace wvg

#endif // WVG_NUMERIC_HPP
