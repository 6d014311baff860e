#ifndef KZRAT_SYMREP_HPP
#define KZRAT_SYMREP_HPP

#include <string>
#include <vector>

#include "kzsystem.hpp"

namespace kzrat {

/// The transposition (i;j) of S_n, 1-based.
struct TranspositionSpec {
    std::size_t n;
    std::size_t i;
    std::size_t j;
};

/// Permutation matrix of (i;j) in the natural representation.
inline RatMatrix transposition_matrix(const TranspositionSpec& t)
{
    if (t.i < 1 || t.j < 1 || t.i > t.n || t.j > t.n || t.i == t.j)
        throw kz_error(errc::bad_indices, "transposition (" + std::to_string(t.i) + ";" + std::to_string(t.j) +
                                              ") in S_" + std::to_string(t.n));
    RatMatrix p = RatMatrix::identity(t.n);
    const std::size_t a = t.i - 1;
    const std::size_t b = t.j - 1;
    p(a, a) = 0;
    p(b, b) = 0;
    p(a, b) = 1;
    p(b, a) = 1;
    return p;
}

/// KZ system with residues P_k = P(1, k+1), k = 1..n-1.
inline KZSystem natural_kz_system(std::size_t n, std::vector<Rational> poles, int rho)
{
    if (n < 2) throw kz_error(errc::bad_indices, "natural representation needs n >= 2");
    if (poles.size() != n - 1)
        throw kz_error(errc::pole_count_mismatch,
                       "S_" + std::to_string(n) + " needs " + std::to_string(n - 1) + " poles, got " +
                           std::to_string(poles.size()));
    std::vector<RatMatrix> residues;
    residues.reserve(n - 1);
    for (std::size_t k = 1; k < n; ++k) residues.push_back(transposition_matrix({n, 1, k + 1}));
    return KZSystem(std::move(poles), std::move(residues), rho);
}

/// True when the residues are exactly P(1,2), ..., P(1,n) in that order.
inline bool is_natural_representation(const KZSystem& sys)
{
    const std::size_t n = sys.n();
    if (n < 2 || sys.s() != n - 1) return false;
    for (std::size_t k = 1; k < n; ++k)
        if (!(sys.residue(k) == transposition_matrix({n, 1, k + 1}))) return false;
    return true;
}

struct T1Decomposition {
    RatMatrix T1;
    int identity_shift = 0;         // T = identity_shift * I + T1
    IntegerSpectrum spectrum;       // of T
    bool ones_eigenvector = false;  // T e = (n-1) e for e = (1, ..., 1)
};

/// Bordered matrix T1 = [[2-n, e], [e^T, 0]] and the spectrum of
/// T = sum_k P(1, k+1) = (n-2) I + T1.
inline T1Decomposition t1_decomposition(std::size_t n)
{
    if (n < 2) throw kz_error(errc::bad_indices, "t1_decomposition needs n >= 2");
    T1Decomposition out;
    out.T1 = RatMatrix(n, n);
    out.T1(0, 0) = 2 - static_cast<long>(n);
    for (std::size_t i = 1; i < n; ++i) {
        out.T1(0, i) = 1;
        out.T1(i, 0) = 1;
    }
    out.identity_shift = static_cast<int>(n) - 2;

    RatMatrix t(n, n);
    for (std::size_t k = 1; k < n; ++k) t += transposition_matrix({n, 1, k + 1});
    const RatMatrix rebuilt = RatMatrix::scalar(n, out.identity_shift) + out.T1;
    if (!(t == rebuilt)) throw kz_error(errc::invariant_violated, "sum of P(1,k+1) != (n-2)I + T1");

    out.spectrum = integer_spectrum(t);
    RatMatrix ones(n, 1);
    for (std::size_t i = 0; i < n; ++i) ones(i, 0) = 1;
    out.ones_eigenvector = t * ones == Rational(static_cast<long>(n) - 1) * ones;
    return out;
}

} // namespace kzrat

#endif // KZRAT_SYMREP_HPP
