#ifndef KZRAT_RATFUNC_HPP
#define KZRAT_RATFUNC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "series.hpp"

namespace kzrat {

inline Rational binomial(unsigned long n, unsigned long k)
{
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

/// Rational matrix function in partial-fraction form
///   F(z) = sum_a sum_{p >= 1} C_{a,p} (z - a)^{-p} + sum_{d >= 0} Q_d z^d.
/// pole_parts()[a][p-1] is C_{a,p}; poly_part()[d] is Q_d. Trailing zero
/// coefficients are never stored, so structural equality is value equality.
class RatMatFunc {
public:
    RatMatFunc(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static RatMatFunc constant(const RatMatrix& c)
    {
        RatMatFunc f(c.rows(), c.cols());
        f.add_poly_term(0, c);
        return f;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::map<Rational, std::vector<RatMatrix>>& pole_parts() const noexcept { return poles_; }
    const std::vector<RatMatrix>& poly_part() const noexcept { return poly_; }

    void add_pole_term(const Rational& a, int order, const RatMatrix& c)
    {
        check_shape(c);
        if (order < 1) throw kz_error(errc::dimension_mismatch, "pole order must be >= 1");
        if (c.is_zero()) return;
        auto& v = poles_[a];
        if (v.size() < static_cast<std::size_t>(order)) v.resize(static_cast<std::size_t>(order), RatMatrix(rows_, cols_));
        v[static_cast<std::size_t>(order - 1)] += c;
        trim(a);
    }

    void add_poly_term(int degree, const RatMatrix& c)
    {
        check_shape(c);
        if (degree < 0) throw kz_error(errc::dimension_mismatch, "polynomial degree must be >= 0");
        if (c.is_zero()) return;
        if (poly_.size() <= static_cast<std::size_t>(degree))
            poly_.resize(static_cast<std::size_t>(degree) + 1, RatMatrix(rows_, cols_));
        poly_[static_cast<std::size_t>(degree)] += c;
        while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
    }

    RatMatrix pole_coeff(const Rational& a, int order) const
    {
        auto it = poles_.find(a);
        if (it == poles_.end() || order < 1 || static_cast<std::size_t>(order) > it->second.size())
            return RatMatrix(rows_, cols_);
        return it->second[static_cast<std::size_t>(order - 1)];
    }

    RatMatrix poly_coeff(int degree) const
    {
        if (degree < 0 || static_cast<std::size_t>(degree) >= poly_.size()) return RatMatrix(rows_, cols_);
        return poly_[static_cast<std::size_t>(degree)];
    }

    /// Highest p with C_{a,p} != 0; 0 when a is not a pole.
    int pole_order(const Rational& a) const
    {
        auto it = poles_.find(a);
        return it == poles_.end() ? 0 : static_cast<int>(it->second.size());
    }

    /// Degree of the polynomial part; nullopt when it is zero.
    std::optional<int> poly_degree() const
    {
        if (poly_.empty()) return std::nullopt;
        return static_cast<int>(poly_.size()) - 1;
    }

    bool is_zero() const { return poles_.empty() && poly_.empty(); }
    bool is_constant() const { return poles_.empty() && poly_.size() <= 1; }

    RatMatFunc transpose() const
    {
        RatMatFunc t(cols_, rows_);
        for (const auto& [a, cs] : poles_)
            for (std::size_t p = 0; p < cs.size(); ++p) t.add_pole_term(a, static_cast<int>(p) + 1, cs[p].transpose());
        for (std::size_t d = 0; d < poly_.size(); ++d) t.add_poly_term(static_cast<int>(d), poly_[d].transpose());
        return t;
    }

    RatMatFunc& operator+=(const RatMatFunc& g)
    {
        if (g.rows_ != rows_ || g.cols_ != cols_) throw kz_error(errc::dimension_mismatch, "RatMatFunc sum");
        for (const auto& [a, cs] : g.poles_)
            for (std::size_t p = 0; p < cs.size(); ++p) add_pole_term(a, static_cast<int>(p) + 1, cs[p]);
        for (std::size_t d = 0; d < g.poly_.size(); ++d) add_poly_term(static_cast<int>(d), g.poly_[d]);
        return *this;
    }

    friend RatMatFunc operator+(RatMatFunc f, const RatMatFunc& g) { return f += g; }
    friend RatMatFunc operator-(RatMatFunc f, const RatMatFunc& g) { return f += Rational(-1) * g; }

    friend RatMatFunc operator*(const Rational& s, const RatMatFunc& f)
    {
        RatMatFunc out(f.rows_, f.cols_);
        for (const auto& [a, cs] : f.poles_)
            for (std::size_t p = 0; p < cs.size(); ++p) out.add_pole_term(a, static_cast<int>(p) + 1, s * cs[p]);
        for (std::size_t d = 0; d < f.poly_.size(); ++d) out.add_poly_term(static_cast<int>(d), s * f.poly_[d]);
        return out;
    }

    /// Left multiplication by a constant matrix.
    friend RatMatFunc operator*(const RatMatrix& m, const RatMatFunc& f)
    {
        RatMatFunc out(m.rows(), f.cols_);
        for (const auto& [a, cs] : f.poles_)
            for (std::size_t p = 0; p < cs.size(); ++p) out.add_pole_term(a, static_cast<int>(p) + 1, m * cs[p]);
        for (std::size_t d = 0; d < f.poly_.size(); ++d) out.add_poly_term(static_cast<int>(d), m * f.poly_[d]);
        return out;
    }

    friend bool operator==(const RatMatFunc& f, const RatMatFunc& g)
    {
        return f.rows_ == g.rows_ && f.cols_ == g.cols_ && f.poles_ == g.poles_ && f.poly_ == g.poly_;
    }

private:
    void check_shape(const RatMatrix& c) const
    {
        if (c.rows() != rows_ || c.cols() != cols_) throw kz_error(errc::dimension_mismatch, "RatMatFunc coefficient shape");
    }

    void trim(const Rational& a)
    {
        auto it = poles_.find(a);
        if (it == poles_.end()) return;
        auto& v = it->second;
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        if (v.empty()) poles_.erase(it);
    }

    std::size_t rows_;
    std::size_t cols_;
    std::map<Rational, std::vector<RatMatrix>> poles_;
    std::vector<RatMatrix> poly_;
};

inline RatMatrix rmf_eval(const RatMatFunc& f, const Rational& z0)
{
    RatMatrix acc(f.rows(), f.cols());
    for (const auto& [a, cs] : f.pole_parts()) {
        if (a == z0) throw kz_error(errc::evaluation_at_pole, "z = " + format_rational(z0));
        const Rational inv = Rational(1) / (z0 - a);
        Rational w = inv;
        for (const auto& c : cs) {
            acc += w * c;
            w *= inv;
        }
    }
    Rational w(1);
    for (const auto& q : f.poly_part()) {
        acc += w * q;
        w *= z0;
    }
    return acc;
}

/// Exact product, re-expressed in partial fractions. Distinct-pole cross
/// terms use the principal parts of (z-a)^{-p} (z-b)^{-q} at a and at b;
/// pole-times-monomial terms expand z^d around the pole.
inline RatMatFunc rmf_mul(const RatMatFunc& f, const RatMatFunc& g)
{
    if (f.cols() != g.rows()) throw kz_error(errc::dimension_mismatch, "rmf_mul");
    RatMatFunc out(f.rows(), g.cols());

    // (z-a)^{-p} z^d (left or right factor), contributing coefficient `c`.
    auto pole_times_monomial = [&](const Rational& a, int p, int d, const RatMatrix& c) {
        for (int i = 0; i <= d; ++i) {
            const Rational w = binomial(d, i) * rational_pow(a, d - i);
            if (i < p) {
                out.add_pole_term(a, p - i, w * c);
            } else {
                const int e = i - p;
                for (int t = 0; t <= e; ++t)
                    out.add_poly_term(t, w * binomial(e, t) * rational_pow(Rational(-a), e - t) * c);
            }
        }
    };

    for (const auto& [a, fa] : f.pole_parts()) {
        for (std::size_t pi = 0; pi < fa.size(); ++pi) {
            const int p = static_cast<int>(pi) + 1;
            if (fa[pi].is_zero()) continue;
            for (const auto& [b, gb] : g.pole_parts()) {
                for (std::size_t qi = 0; qi < gb.size(); ++qi) {
                    const int q = static_cast<int>(qi) + 1;
                    if (gb[qi].is_zero()) continue;
                    const RatMatrix c = fa[pi] * gb[qi];
                    if (a == b) {
                        out.add_pole_term(a, p + q, c);
                        continue;
                    }
                    const Rational ab = a - b;
                    for (int r = 0; r < p; ++r) {
                        Rational w = binomial(q + r - 1, r) / rational_pow(ab, q + r);
                        if (r % 2) w = -w;
                        out.add_pole_term(a, p - r, w * c);
                    }
                    const Rational ba = b - a;
                    for (int r = 0; r < q; ++r) {
                        Rational w = binomial(p + r - 1, r) / rational_pow(ba, p + r);
                        if (r % 2) w = -w;
                        out.add_pole_term(b, q - r, w * c);
                    }
                }
            }
            for (std::size_t d = 0; d < g.poly_part().size(); ++d)
                pole_times_monomial(a, p, static_cast<int>(d), fa[pi] * g.poly_part()[d]);
        }
    }
    for (std::size_t d = 0; d < f.poly_part().size(); ++d) {
        for (const auto& [b, gb] : g.pole_parts())
            for (std::size_t qi = 0; qi < gb.size(); ++qi)
                pole_times_monomial(b, static_cast<int>(qi) + 1, static_cast<int>(d), f.poly_part()[d] * gb[qi]);
        for (std::size_t e = 0; e < g.poly_part().size(); ++e)
            out.add_poly_term(static_cast<int>(d + e), f.poly_part()[d] * g.poly_part()[e]);
    }
    return out;
}

inline RatMatFunc rmf_diff(const RatMatFunc& f)
{
    RatMatFunc out(f.rows(), f.cols());
    for (const auto& [a, cs] : f.pole_parts())
        for (std::size_t pi = 0; pi < cs.size(); ++pi) {
            const int p = static_cast<int>(pi) + 1;
            out.add_pole_term(a, p + 1, Rational(-p) * cs[pi]);
        }
    for (std::size_t d = 1; d < f.poly_part().size(); ++d)
        out.add_poly_term(static_cast<int>(d) - 1, Rational(static_cast<long>(d)) * f.poly_part()[d]);
    return out;
}

/// Taylor-Laurent expansion at a finite point through exponent N.
inline MatLaurent rmf_expand_at(const RatMatFunc& f, const Rational& c, int N)
{
    const int lo = std::min(-f.pole_order(c), 0);
    if (N < lo) throw kz_error(errc::truncation_exceeded, "expansion order below the pole order");
    std::vector<RatMatrix> coeffs(static_cast<std::size_t>(N - lo + 1), RatMatrix(f.rows(), f.cols()));
    auto slot = [&](int e) -> RatMatrix& { return coeffs[static_cast<std::size_t>(e - lo)]; };
    for (const auto& [a, cs] : f.pole_parts()) {
        for (std::size_t pi = 0; pi < cs.size(); ++pi) {
            const int p = static_cast<int>(pi) + 1;
            if (a == c) {
                slot(-p) += cs[pi];
                continue;
            }
            // (z-a)^{-p} = (h + d)^{-p}, h = z - c, d = c - a.
            const Rational d = c - a;
            for (int r = 0; r <= N; ++r) {
                Rational w = binomial(p + r - 1, r) / rational_pow(d, p + r);
                if (r % 2) w = -w;
                slot(r) += w * cs[pi];
            }
        }
    }
    for (std::size_t deg = 0; deg < f.poly_part().size(); ++deg)
        for (int i = 0; i <= static_cast<int>(deg) && i <= N; ++i)
            slot(i) += binomial(deg, i) * rational_pow(c, static_cast<int>(deg) - i) * f.poly_part()[deg];
    return MatLaurent(c, lo, std::move(coeffs));
}

/// Expansion in u = 1/z at u = 0 through u^N. The lowest exponent is
/// -deg(polynomial part).
inline MatLaurent rmf_expand_at_infinity(const RatMatFunc& f, int N)
{
    const int lo = -f.poly_degree().value_or(0);
    if (N < lo) throw kz_error(errc::truncation_exceeded, "expansion order below -deg");
    std::vector<RatMatrix> coeffs(static_cast<std::size_t>(N - lo + 1), RatMatrix(f.rows(), f.cols()));
    auto slot = [&](int e) -> RatMatrix& { return coeffs[static_cast<std::size_t>(e - lo)]; };
    for (std::size_t d = 0; d < f.poly_part().size(); ++d) slot(-static_cast<int>(d)) += f.poly_part()[d];
    for (const auto& [a, cs] : f.pole_parts())
        for (std::size_t pi = 0; pi < cs.size(); ++pi) {
            const int p = static_cast<int>(pi) + 1;
            // (z-a)^{-p} = u^p (1 - a u)^{-p}.
            for (int r = 0; p + r <= N; ++r) slot(p + r) += binomial(p + r - 1, r) * rational_pow(a, r) * cs[pi];
        }
    return MatLaurent(AtInfinity{}, lo, std::move(coeffs));
}

/// A(z) = sum_k P_k / (z - z_k) as a rational matrix function.
inline RatMatFunc coefficient_function(const KZSystem& sys)
{
    RatMatFunc a(sys.n(), sys.n());
    for (std::size_t k = 0; k < sys.s(); ++k) a.add_pole_term(sys.poles()[k], 1, sys.residues()[k]);
    return a;
}

} // namespace kzrat

#endif // KZRAT_RATFUNC_HPP
