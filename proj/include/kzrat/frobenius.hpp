#ifndef KZRAT_FROBENIUS_HPP
#define KZRAT_FROBENIUS_HPP

#include <array>
#include <string_view>
#include <vector>

#include "kzsystem.hpp"
#include "linsolve.hpp"

namespace kzrat {

/// Raised when a closed-form identity fails to hold; carries the offending
/// matrix so callers can report what was actually computed.
class invariant_violated : public kz_error {
public:
    invariant_violated(const std::string& what, RatMatrix computed)
        : kz_error(errc::invariant_violated, what + ": got " + computed.to_string()), computed_(std::move(computed))
    {
    }

    const RatMatrix& computed() const noexcept { return computed_; }

private:
    RatMatrix computed_;
};

/// Right: dW/dz = rho A W. Left: dY/dz = -rho Y A.
enum class Side { right, left };

inline std::string_view to_string(Side s) noexcept { return s == Side::right ? "right" : "left"; }

struct ResonanceEntry {
    int exponent;
    std::size_t kernel_dimension;
    bool compatible;
};

struct LocalSolution {
    Rational center;
    Side side;
    MatLaurent series;
    std::vector<ResonanceEntry> resonance_log;
    bool valid = true;
};

struct ExponentBounds {
    int m;
    int M;
};

/// Least and greatest integer eigenvalue of R (the effective residue
/// rho * P_k). Throws NoIntegerEigenvalues when there is none, i.e. no
/// Laurent-form solution can exist at that point.
inline ExponentBounds exponent_bounds(const RatMatrix& r)
{
    const IntegerSpectrum sp = integer_spectrum(r);
    if (sp.integer_roots.empty()) throw kz_error(errc::no_integer_eigenvalues, "residue " + r.to_string());
    return {static_cast<int>(*sp.min()), static_cast<int>(*sp.max())};
}

namespace detail {

// One step of either recursion: solves op(X) = rhs where op is
// X -> ((q+1)I - R) X on the right side and X -> X ((q+1)I + R) on the left.
// Resonant steps take the particular solution orthogonal to the kernel.
inline std::optional<RatMatrix> recursion_step(const RatMatrix& shifted, const RatMatrix& rhs, Side side,
                                               int exponent, std::vector<ResonanceEntry>& log)
{
    const bool left = side == Side::left;
    const RatMatrix a = left ? shifted.transpose() : shifted;
    const RatMatrix b = left ? rhs.transpose() : rhs;
    auto sol = solve_linear(a, b);
    const std::size_t kdim = a.cols() - rank(a);
    if (kdim > 0) log.push_back({exponent, kdim, sol.has_value()});
    if (!sol) return std::nullopt;
    RatMatrix x = kdim > 0 ? project_off_kernel(sol->particular, sol->kernel_basis) : sol->particular;
    return left ? x.transpose() : x;
}

inline LocalSolution recurse(const KZSystem& sys, std::size_t k, const RatMatrix& seed, int m, int N, Side side)
{
    const std::size_t n = sys.n();
    const RatMatrix r = sys.effective_residue(k);
    const Rational rho(sys.rho());
    const RatMatrix id = RatMatrix::identity(n);
    const bool left = side == Side::left;

    if (left ? seed.cols() != n : seed.rows() != n)
        throw kz_error(errc::dimension_mismatch, "seed shape does not match the system");
    if (seed.is_zero()) throw kz_error(errc::bad_seed, "seed must be nonzero");
    const RatMatrix indicial = left ? seed * (Rational(m) * id + r) : (Rational(m) * id - r) * seed;
    if (!indicial.is_zero())
        throw kz_error(errc::bad_seed, "seed violates the indicial constraint at exponent " + std::to_string(m));
    if (N < m) throw kz_error(errc::truncation_exceeded, "target order below the leading exponent");

    const MatLaurent a = local_coefficients(sys, k, std::max(N - m - 1, -1));
    LocalSolution out{sys.pole(k), side, MatLaurent(sys.pole(k), m, {seed}), {}, true};
    std::vector<RatMatrix> c{seed};
    for (int e = m + 1; e <= N; ++e) {
        // Sum over j >= 0 of a_j times the coefficient at exponent e - 1 - j.
        RatMatrix rhs(seed.rows(), seed.cols());
        for (int j = 0; e - 1 - j >= m; ++j) {
            const RatMatrix& prev = c[static_cast<std::size_t>(e - 1 - j - m)];
            rhs += left ? prev * a.coeff(j) : a.coeff(j) * prev;
        }
        rhs *= left ? Rational(-rho) : rho;
        const RatMatrix shifted = left ? Rational(e) * id + r : Rational(e) * id - r;
        auto next = recursion_step(shifted, rhs, side, e, out.resonance_log);
        if (!next) {
            out.valid = false;
            break;
        }
        c.push_back(std::move(*next));
    }
    out.series = MatLaurent(sys.pole(k), m, std::move(c));
    return out;
}

} // namespace detail

/// Coefficients b_m..b_N of a right local solution at z_k from
/// ((q+1)I - rho P_k) b_{q+1} = rho sum_{j >= 0} a_j b_{q-j}.
inline LocalSolution recurse_right(const KZSystem& sys, std::size_t k, const RatMatrix& seed, int m, int N)
{
    return detail::recurse(sys, k, seed, m, N, Side::right);
}

/// Coefficients c_m..c_N of a left local solution at z_k from
/// c_{q+1}((q+1)I + rho P_k) = -rho sum_{j >= 0} c_{q-j} a_j.
inline LocalSolution recurse_left(const KZSystem& sys, std::size_t k, const RatMatrix& seed, int m, int N)
{
    return detail::recurse(sys, k, seed, m, N, Side::left);
}

/// Residuals of the recursion for coefficients given at exponents
/// m, m+1, ...; entry i is the defect at exponent m + i (entry 0 is the
/// indicial defect). All zero iff the coefficients satisfy the recursion.
inline std::vector<RatMatrix> recursion_residuals(const KZSystem& sys, std::size_t k, Side side, int m,
                                                  const std::vector<RatMatrix>& coeffs)
{
    const std::size_t n = sys.n();
    const RatMatrix r = sys.effective_residue(k);
    const Rational rho(sys.rho());
    const RatMatrix id = RatMatrix::identity(n);
    const bool left = side == Side::left;
    const MatLaurent a = local_coefficients(sys, k, std::max(static_cast<int>(coeffs.size()) - 2, -1));
    std::vector<RatMatrix> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Rational e(m + static_cast<int>(i));
        RatMatrix lhs = left ? coeffs[i] * (e * id + r) : (e * id - r) * coeffs[i];
        RatMatrix rhs(coeffs[i].rows(), coeffs[i].cols());
        for (std::size_t j = 0; j < i; ++j) {
            const RatMatrix& prev = coeffs[i - 1 - j];
            rhs += left ? prev * a.coeff(static_cast<int>(j)) : a.coeff(static_cast<int>(j)) * prev;
        }
        rhs *= left ? Rational(-rho) : rho;
        out.push_back(lhs - rhs);
    }
    return out;
}

/// Closed-form leading coefficients at exponents -1, 0, 1.
struct CanonicalSeeds {
    std::array<RatMatrix, 3> right;  // b_{-1}, b_0, b_1
    std::array<RatMatrix, 3> left;   // c_{-1}, c_0, c_1
    Rational beta;
    bool beta_zero = false;
};

/// With S1 = sum_{j != k} P_j/(z_k - z_j), S2 = sum_{j != k} P_j/(z_k - z_j)^2
/// and P = P_k, at rho = 1:
///   b_{-1} = P^+, b_0 = -P S1 P^+, b_1 = -beta I  (beta != 0) or P^- (beta = 0)
///   c_{-1} = P^-, c_0 = -P^- S1 P, c_1 = S1 P S1 + S2 (+ P^+ when beta = 0).
/// At rho = -1 the two sides trade places under transposition.
inline CanonicalSeeds canonical_seeds(const KZSystem& sys, std::size_t k)
{
    const std::size_t kk = sys.index(k);
    if (sys.rho() != 1 && sys.rho() != -1)
        throw kz_error(errc::conditions_not_satisfied, "closed-form seeds exist only for rho = +1 or -1");
    const ConditionReport rep = check_conditions(sys);
    if (!rep.all_pass) throw kz_error(errc::conditions_not_satisfied, "system fails the rational-solvability conditions");

    const std::size_t n = sys.n();
    const RatMatrix& p = sys.residues()[kk];
    const auto [plus, minus] = projectors(p);
    RatMatrix s1(n, n);
    RatMatrix s2(n, n);
    for (std::size_t j = 0; j < sys.s(); ++j) {
        if (j == kk) continue;
        const Rational d = sys.poles()[kk] - sys.poles()[j];
        s1 += sys.residues()[j] * (Rational(1) / d);
        s2 += sys.residues()[j] * (Rational(1) / (d * d));
    }

    CanonicalSeeds out;
    out.beta = beta(sys, k);
    out.beta_zero = sgn(out.beta) == 0;
    std::array<RatMatrix, 3> b{plus, -(p * s1 * plus), out.beta_zero ? minus : RatMatrix::scalar(n, -out.beta)};
    RatMatrix c1 = s1 * p * s1 + s2;
    if (out.beta_zero) c1 += plus;
    std::array<RatMatrix, 3> c{minus, -(minus * s1 * p), c1};

    if (sys.rho() == 1) {
        out.right = std::move(b);
        out.left = std::move(c);
    } else {
        for (std::size_t i = 0; i < 3; ++i) {
            out.right[i] = c[i].transpose();
            out.left[i] = b[i].transpose();
        }
    }
    return out;
}

/// b_0 c_0 + b_{-1} c_1 + b_1 c_{-1} from the canonical seeds. Throws
/// invariant_violated (carrying the computed matrix) unless it equals
/// 2 beta_k I for beta_k != 0, 4 I for beta_k = 0, and is invertible.
inline RatMatrix product_invariant(const KZSystem& sys, std::size_t k)
{
    const CanonicalSeeds s = canonical_seeds(sys, k);
    const RatMatrix prod = s.right[1] * s.left[1] + s.right[0] * s.left[2] + s.right[2] * s.left[0];
    const std::size_t n = sys.n();
    const RatMatrix expected = s.beta_zero ? RatMatrix::scalar(n, 4) : RatMatrix::scalar(n, 2 * s.beta);
    if (sgn(prod.det()) == 0) throw invariant_violated("product invariant is singular", prod);
    if (!(prod == expected))
        throw invariant_violated("product invariant differs from " + std::string(s.beta_zero ? "4I" : "2*beta*I"), prod);
    return prod;
}

/// Standalone commutation identities implied by the hypotheses and symmetric
/// residues: P_k^- commutes with P_j P_k P_l + P_l P_k P_j (distinct j,k,l)
/// and with P_j P_k P_j + P_j (j != k). Witness indices are 1-based.
inline ConditionResult check_commutation_identities(const KZSystem& sys)
{
    const auto& p = sys.residues();
    const std::size_t s = sys.s();
    const RatMatrix id = RatMatrix::identity(sys.n());
    ConditionResult res;
    if (s < 2) {
        res.status = CheckStatus::vacuous;
        return res;
    }
    for (std::size_t k = 0; k < s; ++k) {
        const RatMatrix minus = id + p[k];
        for (std::size_t j = 0; j < s; ++j) {
            if (j == k) continue;
            const RatMatrix x = p[j] * p[k] * p[j] + p[j];
            detail::record(res, minus * x == x * minus, {j + 1, k + 1});
            for (std::size_t l = 0; l < s; ++l) {
                if (l == j || l == k) continue;
                const RatMatrix y = p[j] * p[k] * p[l] + p[l] * p[k] * p[j];
                detail::record(res, minus * y == y * minus, {j + 1, k + 1, l + 1});
            }
        }
    }
    return res;
}

} // namespace kzrat

#endif // KZRAT_FROBENIUS_HPP
