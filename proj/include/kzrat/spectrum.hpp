#ifndef KZRAT_SPECTRUM_HPP
#define KZRAT_SPECTRUM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "matrix.hpp"

namespace kzrat {

struct IntegerRoot {
    std::int64_t value;
    std::size_t multiplicity;

    friend bool operator==(const IntegerRoot&, const IntegerRoot&) = default;
};

/// The integer part of a matrix spectrum. Non-integer eigenvalues are never
/// approximated; they only show up as all_integer == false.
struct IntegerSpectrum {
    std::vector<IntegerRoot> integer_roots;  // ascending by value
    bool all_integer = false;
    std::vector<Rational> characteristic_polynomial;  // det(xI - A), ascending powers, monic

    std::optional<std::int64_t> min() const
    {
        if (integer_roots.empty()) return std::nullopt;
        return integer_roots.front().value;
    }

    std::optional<std::int64_t> max() const
    {
        if (integer_roots.empty()) return std::nullopt;
        return integer_roots.back().value;
    }

    std::size_t multiplicity(std::int64_t v) const
    {
        for (const auto& r : integer_roots)
            if (r.value == v) return r.multiplicity;
        return 0;
    }

    bool contains(std::int64_t v) const { return multiplicity(v) > 0; }
};

inline Rational poly_eval(std::span<const Rational> coeffs, const Rational& x)
{
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// det(xI - A) by the Faddeev-LeVerrier recurrence, exact over Q.
inline std::vector<Rational> characteristic_polynomial(const RatMatrix& a)
{
    if (!a.is_square()) throw kz_error(errc::non_square, "characteristic_polynomial");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

namespace detail {

// Synthetic division by (x - r); returns the remainder.
inline Rational deflate(std::vector<Rational>& coeffs, const Rational& r)
{
    const std::size_t deg = coeffs.size() - 1;
    std::vector<Rational> q(deg);
    Rational carry(0);
    for (std::size_t i = deg + 1; i-- > 0;) {
        const Rational v = coeffs[i] + carry * r;
        if (i == 0) {
            if (sgn(v) == 0) coeffs = std::move(q);
            return v;
        }
        q[i - 1] = v;
        carry = v;
    }
    return carry;
}

} // namespace detail

/// Integer eigenvalues with multiplicity. Candidates are divisors of the
/// lowest nonzero coefficient of the integer-scaled characteristic
/// polynomial, restricted to the Cauchy bound.
inline IntegerSpectrum integer_spectrum(const RatMatrix& a)
{
    IntegerSpectrum out;
    out.characteristic_polynomial = characteristic_polynomial(a);
    std::vector<Rational> p = out.characteristic_polynomial;
    const std::size_t n = a.rows();

    std::size_t zero_mult = 0;
    while (p.size() > 1 && sgn(p.front()) == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    std::vector<IntegerRoot> roots;
    if (zero_mult) roots.push_back({0, zero_mult});

    if (p.size() > 1) {
        Integer lcm_den(1);
        for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
        const Rational scaled_const = p.front() * Rational(lcm_den);
        Integer const_term = abs(scaled_const.get_num());

        Rational cauchy(0);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) cauchy = std::max(cauchy, Rational(abs(p[i])));
        cauchy += 1;
        const Integer bound = cauchy.get_num() / cauchy.get_den();

        std::vector<Integer> candidates;
        for (Integer d = 1; d <= bound && d * d <= const_term; ++d) {
            if (const_term % d != 0) continue;
            candidates.push_back(d);
            const Integer co = const_term / d;
            if (co != d && co <= bound) candidates.push_back(co);
        }
        for (const auto& d : candidates) {
            for (int s : {1, -1}) {
                const Integer v = d * s;
                if (!v.fits_slong_p()) throw kz_error(errc::invariant_violated, "integer eigenvalue exceeds 64 bits");
                const Rational r(v);
                std::size_t mult = 0;
                while (p.size() > 1 && sgn(poly_eval(p, r)) == 0) {
                    detail::deflate(p, r);
                    ++mult;
                }
                if (mult) roots.push_back({static_cast<std::int64_t>(v.get_si()), mult});
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
    std::size_t total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    out.integer_roots = std::move(roots);
    out.all_integer = total == n;
    return out;
}

} // namespace kzrat

#endif // KZRAT_SPECTRUM_HPP
