#ifndef KZRAT_MATRIX_HPP
#define KZRAT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace kzrat {

/// Dense row-major matrix over the rationals. Equality is exact entrywise.
class RatMatrix {
public:
    RatMatrix() = default;

    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0))
    {
    }

    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw kz_error(errc::dimension_mismatch, "ragged matrix initializer");
            for (const auto& v : row) entries_.push_back(v);
        }
    }

    static RatMatrix identity(std::size_t n)
    {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }

    static RatMatrix scalar(std::size_t n, const Rational& s)
    {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool same_shape(const RatMatrix& o) const noexcept { return rows_ == o.rows_ && cols_ == o.cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    bool is_zero() const
    {
        for (const auto& v : entries_)
            if (sgn(v) != 0) return false;
        return true;
    }

    bool is_symmetric() const
    {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    RatMatrix transpose() const
    {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix column(std::size_t j) const
    {
        RatMatrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    void set_column(std::size_t j, const RatMatrix& c)
    {
        if (c.rows_ != rows_ || c.cols_ != 1) throw kz_error(errc::dimension_mismatch, "set_column");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
    }

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& block)
    {
        if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
            throw kz_error(errc::dimension_mismatch, "set_block out of range");
        for (std::size_t i = 0; i < block.rows_; ++i)
            for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
    }

    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const
    {
        if (r0 + rows > rows_ || c0 + cols > cols_) throw kz_error(errc::dimension_mismatch, "block out of range");
        RatMatrix b(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    Rational trace() const
    {
        if (!is_square()) throw kz_error(errc::non_square, "trace");
        Rational t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    RatMatrix& operator+=(const RatMatrix& o)
    {
        require_same_shape(o, "+");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }

    RatMatrix& operator-=(const RatMatrix& o)
    {
        require_same_shape(o, "-");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }

    RatMatrix& operator*=(const Rational& s)
    {
        for (auto& v : entries_) v *= s;
        return *this;
    }

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
    friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
    friend RatMatrix operator-(RatMatrix a)
    {
        for (auto& v : a.entries_) v = -v;
        return a;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
    {
        if (a.cols_ != b.rows_) throw kz_error(errc::dimension_mismatch, "matrix product");
        RatMatrix c(a.rows_, b.cols_);
        Rational tmp;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    tmp = aik * b(k, j);
                    c(i, j) += tmp;
                }
            }
        return c;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    /// Determinant by Gaussian elimination over Q.
    Rational det() const
    {
        if (!is_square()) throw kz_error(errc::non_square, "det");
        RatMatrix m = *this;
        Rational d(1);
        const std::size_t n = rows_;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && sgn(m(p, c)) == 0) ++p;
            if (p == n) return Rational(0);
            if (p != c) {
                m.swap_rows(p, c);
                d = -d;
            }
            d *= m(c, c);
            for (std::size_t r = c + 1; r < n; ++r) {
                if (sgn(m(r, c)) == 0) continue;
                const Rational f = m(r, c) / m(c, c);
                for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
            }
        }
        return d;
    }

    /// Inverse by Gauss-Jordan; throws InvariantViolated when singular.
    RatMatrix inverse() const
    {
        if (!is_square()) throw kz_error(errc::non_square, "inverse");
        const std::size_t n = rows_;
        RatMatrix m = *this;
        RatMatrix inv = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && sgn(m(p, c)) == 0) ++p;
            if (p == n) throw kz_error(errc::invariant_violated, "matrix is singular");
            m.swap_rows(p, c);
            inv.swap_rows(p, c);
            const Rational piv = m(c, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(c, j) /= piv;
                inv(c, j) /= piv;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || sgn(m(r, c)) == 0) continue;
                const Rational f = m(r, c);
                for (std::size_t j = 0; j < n; ++j) {
                    m(r, j) -= f * m(c, j);
                    inv(r, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::string to_string() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << ", ";
            os << '[';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << format_rational((*this)(i, j));
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.to_string(); }

private:
    void require_same_shape(const RatMatrix& o, const char* op) const
    {
        if (!same_shape(o)) throw kz_error(errc::dimension_mismatch, std::string("operator") + op);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

} // namespace kzrat

#endif // KZRAT_MATRIX_HPP
