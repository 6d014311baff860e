#ifndef KZRAT_RATIONAL_HPP
#define KZRAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace kzrat {

/// Exact rational scalar. GMP keeps it canonical: denominator > 0 and
/// gcd(|num|, den) = 1 after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in canonical form. mpq_class(p, q) alone does not canonicalize, and
/// GMP arithmetic and comparison assume canonical operands.
inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) throw kz_error(errc::parse_error, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only, q != 0).
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&](const char* why) {
        return kz_error(errc::parse_error, std::string(why) + " in rational '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw fail("missing numerator digits");
    std::string_view den_part;
    if (i < text.size()) {
        if (text[i] != '/') throw fail("unexpected character");
        ++i;
        const std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) throw fail("malformed denominator");
        den_part = text.substr(den_begin);
    }
    const std::size_t slash = text.find('/');
    std::string num_str(text.substr(0, slash == std::string_view::npos ? text.size() : slash));
    if (num_str[0] == '+') num_str.erase(0, 1);
    Integer num(num_str, 10);
    Integer den(1);
    if (!den_part.empty()) {
        den = Integer(std::string(den_part), 10);
        if (den == 0) throw fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when q = 1.
inline std::string format_rational(const Rational& r)
{
    return r.get_str(10);
}

inline bool is_integer(const Rational& r)
{
    return r.get_den() == 1;
}

inline Rational rational_pow(const Rational& base, int exponent)
{
    Rational result(1);
    Rational b = exponent >= 0 ? base : Rational(1) / base;
    for (int e = exponent >= 0 ? exponent : -exponent; e > 0; --e) result *= b;
    return result;
}

} // namespace kzrat

#endif // KZRAT_RATIONAL_HPP
