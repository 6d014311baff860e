#ifndef KZRAT_SERIES_HPP
#define KZRAT_SERIES_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "system.hpp"

namespace kzrat {

struct AtInfinity {
    friend bool operator==(const AtInfinity&, const AtInfinity&) = default;
};

/// Expansion point. A series at infinity is a series in u = 1/z at u = 0.
using Center = std::variant<Rational, AtInfinity>;

inline bool is_infinity(const Center& c) { return std::holds_alternative<AtInfinity>(c); }

inline std::string format_center(const Center& c)
{
    return is_infinity(c) ? std::string("infinity") : format_rational(std::get<Rational>(c));
}

/// Truncated matrix Laurent series sum_{e = min_order}^{truncation_order} C_e x^e,
/// x = z - center (or u = 1/z at infinity). Coefficients up to and including
/// truncation_order are exact; nothing beyond it is known.
class MatLaurent {
public:
    MatLaurent(Center center, int min_order, std::vector<RatMatrix> coeffs)
        : center_(std::move(center)), min_order_(min_order), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) throw kz_error(errc::dimension_mismatch, "a series needs at least one coefficient");
        rows_ = coeffs_.front().rows();
        cols_ = coeffs_.front().cols();
        for (const auto& c : coeffs_)
            if (c.rows() != rows_ || c.cols() != cols_)
                throw kz_error(errc::dimension_mismatch, "series coefficients of different shapes");
        normalize();
    }

    static MatLaurent zero(Center center, std::size_t rows, std::size_t cols, int truncation_order)
    {
        return MatLaurent(std::move(center), truncation_order, {RatMatrix(rows, cols)});
    }

    const Center& center() const noexcept { return center_; }
    int min_order() const noexcept { return min_order_; }
    int truncation_order() const noexcept { return min_order_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<RatMatrix>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatMatrix& c) { return c.is_zero(); });
    }

    /// Coefficient of x^e; zero below min_order, TruncationExceeded above.
    RatMatrix coeff(int e) const
    {
        if (e > truncation_order())
            throw kz_error(errc::truncation_exceeded, "exponent " + std::to_string(e) + " beyond truncation order " +
                                                         std::to_string(truncation_order()));
        if (e < min_order_) return RatMatrix(rows_, cols_);
        return coeffs_[static_cast<std::size_t>(e - min_order_)];
    }

    /// Drops every coefficient above `order`.
    MatLaurent truncated(int order) const
    {
        if (order >= truncation_order()) return *this;
        if (order < min_order_) return zero(center_, rows_, cols_, order);
        return MatLaurent(center_, min_order_,
                          std::vector<RatMatrix>(coeffs_.begin(), coeffs_.begin() + (order - min_order_ + 1)));
    }

    /// d/dz of a series at a finite center.
    MatLaurent derivative() const
    {
        if (is_infinity(center_)) throw kz_error(errc::center_mismatch, "derivative of a series at infinity");
        std::vector<RatMatrix> d;
        d.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            d.push_back(coeffs_[i] * Rational(min_order_ + static_cast<int>(i)));
        return MatLaurent(center_, min_order_ - 1, std::move(d));
    }

    /// Truncated sum evaluated at x = point - center (x = 1/point at infinity).
    RatMatrix evaluate(const Rational& point) const
    {
        Rational x;
        if (is_infinity(center_)) {
            if (sgn(point) == 0) throw kz_error(errc::evaluation_at_pole, "series at infinity evaluated at z = 0");
            x = Rational(1) / point;
        } else {
            x = point - std::get<Rational>(center_);
        }
        if (sgn(x) == 0 && min_order_ < 0) throw kz_error(errc::evaluation_at_pole, "series evaluated at its center");
        RatMatrix acc(rows_, cols_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const int e = min_order_ + static_cast<int>(i);
            if (sgn(x) == 0 && e > 0) continue;
            acc += coeffs_[i] * rational_pow(x, e);
        }
        return acc;
    }

    friend MatLaurent operator+(const MatLaurent& f, const MatLaurent& g) { return combine(f, g, Rational(1)); }
    friend MatLaurent operator-(const MatLaurent& f, const MatLaurent& g) { return combine(f, g, Rational(-1)); }

    friend MatLaurent operator*(const Rational& s, const MatLaurent& f)
    {
        std::vector<RatMatrix> c;
        for (const auto& m : f.coeffs_) c.push_back(s * m);
        return MatLaurent(f.center_, f.min_order_, std::move(c));
    }

    /// Exact equality of all coefficients through the common truncation order.
    friend bool agree_through(const MatLaurent& f, const MatLaurent& g, int order)
    {
        for (int e = std::min(f.min_order_, g.min_order_); e <= order; ++e)
            if (!(f.coeff(e) == g.coeff(e))) return false;
        return true;
    }

private:
    static MatLaurent combine(const MatLaurent& f, const MatLaurent& g, const Rational& sign)
    {
        if (!(f.center_ == g.center_)) throw kz_error(errc::center_mismatch, "series sum");
        if (f.rows_ != g.rows_ || f.cols_ != g.cols_) throw kz_error(errc::dimension_mismatch, "series sum");
        const int lo = std::min(f.min_order_, g.min_order_);
        const int hi = std::min(f.truncation_order(), g.truncation_order());
        if (hi < lo) return zero(f.center_, f.rows_, f.cols_, hi);
        std::vector<RatMatrix> c;
        for (int e = lo; e <= hi; ++e) c.push_back(f.coeff(e) + sign * g.coeff(e));
        return MatLaurent(f.center_, lo, std::move(c));
    }

    // Strips leading zero coefficients; the truncation order is unchanged.
    void normalize()
    {
        std::size_t lead = 0;
        while (lead + 1 < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
        if (lead) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
            min_order_ += static_cast<int>(lead);
        }
    }

    Center center_;
    int min_order_;
    std::vector<RatMatrix> coeffs_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
};

/// Cauchy product, known through min(t_f + m_g, t_g + m_f).
inline MatLaurent series_mul(const MatLaurent& f, const MatLaurent& g)
{
    if (!(f.center() == g.center())) throw kz_error(errc::center_mismatch, "series_mul");
    if (f.cols() != g.rows()) throw kz_error(errc::dimension_mismatch, "series_mul");
    const int lo = f.min_order() + g.min_order();
    const int hi = std::min(f.truncation_order() + g.min_order(), g.truncation_order() + f.min_order());
    std::vector<RatMatrix> c;
    c.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) {
        RatMatrix acc(f.rows(), g.cols());
        for (int i = f.min_order(); i <= f.truncation_order(); ++i) {
            const int j = e - i;
            if (j < g.min_order()) break;
            if (j > g.truncation_order()) continue;
            acc += f.coeffs()[static_cast<std::size_t>(i - f.min_order())] *
                   g.coeffs()[static_cast<std::size_t>(j - g.min_order())];
        }
        c.push_back(std::move(acc));
    }
    return MatLaurent(f.center(), lo, std::move(c));
}

/// Expansion of A(z) (without rho) at z_k through exponent N:
/// a_{-1} = P_k, a_r = (-1)^r sum_{j != k} P_j / (z_k - z_j)^{r+1}.
inline MatLaurent local_coefficients(const KZSystem& sys, std::size_t k, int N)
{
    const std::size_t kk = sys.index(k);
    if (N < -1) throw kz_error(errc::truncation_exceeded, "local_coefficients needs N >= -1");
    const std::size_t n = sys.n();
    std::vector<RatMatrix> c;
    c.push_back(sys.residues()[kk]);
    for (int r = 0; r <= N; ++r) {
        RatMatrix a(n, n);
        for (std::size_t j = 0; j < sys.s(); ++j) {
            if (j == kk) continue;
            const Rational d = sys.poles()[kk] - sys.poles()[j];
            Rational w = Rational(1) / rational_pow(d, r + 1);
            if (r % 2) w = -w;
            a += w * sys.residues()[j];
        }
        c.push_back(std::move(a));
    }
    return MatLaurent(sys.poles()[kk], -1, std::move(c));
}

/// Expansion of A(z) in u = 1/z through u^N:
/// A = sum_k P_k u / (1 - z_k u) = sum_{r >= 1} (sum_k z_k^{r-1} P_k) u^r.
inline MatLaurent infinity_coefficients(const KZSystem& sys, int N)
{
    const std::size_t n = sys.n();
    std::vector<RatMatrix> c;
    c.push_back(RatMatrix(n, n));
    for (int r = 1; r <= N; ++r) {
        RatMatrix a(n, n);
        for (std::size_t k = 0; k < sys.s(); ++k) a += rational_pow(sys.poles()[k], r - 1) * sys.residues()[k];
        c.push_back(std::move(a));
    }
    return MatLaurent(AtInfinity{}, 0, std::move(c));
}

struct InfinityForm {
    RatMatrix T;
    bool tail_order_ok = false;
};

/// T = sum_k P_k, and a check that z A(z) -> T at infinity (A vanishes at
/// u^0 and its u^1 coefficient is T).
inline InfinityForm infinity_form(const KZSystem& sys)
{
    InfinityForm out{RatMatrix(sys.n(), sys.n()), false};
    for (const auto& p : sys.residues()) out.T += p;
    const MatLaurent at_inf = infinity_coefficients(sys, 2);
    out.tail_order_ok = at_inf.coeff(0).is_zero() && at_inf.coeff(1) == out.T;
    return out;
}

} // namespace kzrat

#endif // KZRAT_SERIES_HPP
