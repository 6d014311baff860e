#ifndef KZRAT_LINSOLVE_HPP
#define KZRAT_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace kzrat {

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Only columns [0, pivot_cols) are eligible as
/// pivots, which lets callers reduce an augmented matrix [A | B] while
/// reading inconsistency off the B block.
inline RowEchelon row_reduce(RatMatrix m, std::size_t pivot_cols)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < pivot_cols && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, row);
        const Rational piv = m(row, c);
        if (piv != 1)
            for (std::size_t j = c; j < m.cols(); ++j) m(row, j) /= piv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, c)) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(row, j)) != 0) m(r, j) -= f * m(row, j);
        }
        out.pivots.push_back(c);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

inline RowEchelon row_reduce(const RatMatrix& m) { return row_reduce(m, m.cols()); }

inline std::size_t rank(const RatMatrix& a) { return row_reduce(a).pivots.size(); }

namespace detail {

inline std::vector<RatMatrix> kernel_from_rref(const RowEchelon& e, std::size_t cols)
{
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatMatrix> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatMatrix v(cols, 1);
        v(f, 0) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

/// Basis of {x : A x = 0} as column vectors, one per free column of the
/// reduced form (so the result is deterministic).
inline std::vector<RatMatrix> nullspace(const RatMatrix& a)
{
    return detail::kernel_from_rref(row_reduce(a), a.cols());
}

struct LinearSolution {
    RatMatrix particular;
    std::vector<RatMatrix> kernel_basis;
};

/// Solves A X = B exactly. Returns std::nullopt when rank([A|B]) > rank(A).
/// Free variables of the particular solution are set to zero.
inline std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows()) throw kz_error(errc::dimension_mismatch, "solve_linear: row counts differ");
    RatMatrix aug(a.rows(), a.cols() + b.cols());
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    const RowEchelon e = row_reduce(std::move(aug), a.cols());

    for (std::size_t r = e.pivots.size(); r < a.rows(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(e.reduced(r, a.cols() + j)) != 0) return std::nullopt;

    LinearSolution sol;
    sol.particular = RatMatrix(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) sol.particular(e.pivots[r], j) = e.reduced(r, a.cols() + j);
    sol.kernel_basis = detail::kernel_from_rref(e, a.cols());
    return sol;
}

/// Removes from every column of x its orthogonal projection onto span(kernel)
/// under the standard inner product. A x is unchanged when kernel spans ker A.
inline RatMatrix project_off_kernel(const RatMatrix& x, const std::vector<RatMatrix>& kernel)
{
    if (kernel.empty()) return x;
    const std::size_t dim = x.rows();
    RatMatrix k(dim, kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j) k.set_column(j, kernel[j]);
    const RatMatrix kt = k.transpose();
    const RatMatrix gram_inv = (kt * k).inverse();
    return x - k * (gram_inv * (kt * x));
}

} // namespace kzrat

#endif // KZRAT_LINSOLVE_HPP
