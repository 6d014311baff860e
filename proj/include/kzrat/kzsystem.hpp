#ifndef KZRAT_KZSYSTEM_HPP
#define KZRAT_KZSYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "series.hpp"
#include "spectrum.hpp"
#include "system.hpp"

namespace kzrat {

struct Projectors {
    RatMatrix plus;   // I - P
    RatMatrix minus;  // I + P
};

inline Projectors projectors(const RatMatrix& p)
{
    if (!p.is_square()) throw kz_error(errc::non_square, "projectors");
    const RatMatrix id = RatMatrix::identity(p.rows());
    return {id - p, id + p};
}

enum class CheckStatus { pass, fail, vacuous };

inline std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
    }
    return "?";
}

/// Outcome of one hypothesis. `witness` holds the 1-based indices of the
/// first failing instance, (k), (j,k) or (j,k,l) depending on the condition.
struct ConditionResult {
    CheckStatus status = CheckStatus::pass;
    std::vector<std::size_t> witness;
    std::size_t instances_checked = 0;
    std::size_t failures = 0;

    bool ok() const noexcept { return status != CheckStatus::fail; }
};

struct ConditionReport {
    ConditionResult involution;  // P_k^2 = I
    ConditionResult triple;      // [P_j P_k P_l + P_l P_k P_j] P_k^+ = 0, distinct j,k,l
    ConditionResult pair;        // (P_j P_k P_j + P_j) P_k^+ = P_k^+, j != k
    ConditionResult symmetry;    // P_j = P_j^T
    bool all_pass = false;
};

namespace detail {

inline void record(ConditionResult& r, bool holds, std::vector<std::size_t> idx)
{
    ++r.instances_checked;
    if (holds) return;
    if (r.failures++ == 0) r.witness = std::move(idx);
    r.status = CheckStatus::fail;
}

} // namespace detail

/// Checks the four rational-solvability hypotheses over every ordered index
/// tuple. Conditions with no admissible tuple (triples for s < 3, pairs for
/// s < 2) are reported vacuous and count as passing.
inline ConditionReport check_conditions(const KZSystem& sys)
{
    const auto& p = sys.residues();
    const std::size_t s = sys.s();
    const RatMatrix id = RatMatrix::identity(sys.n());
    std::vector<RatMatrix> plus;
    plus.reserve(s);
    for (const auto& pk : p) plus.push_back(id - pk);

    ConditionReport rep;
    for (std::size_t k = 0; k < s; ++k) {
        detail::record(rep.involution, p[k] * p[k] == id, {k + 1});
        detail::record(rep.symmetry, p[k].is_symmetric(), {k + 1});
    }

    if (s < 2) {
        rep.pair.status = CheckStatus::vacuous;
    } else {
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t k = 0; k < s; ++k) {
                if (j == k) continue;
                const RatMatrix lhs = (p[j] * p[k] * p[j] + p[j]) * plus[k];
                detail::record(rep.pair, lhs == plus[k], {j + 1, k + 1});
            }
    }

    if (s < 3) {
        rep.triple.status = CheckStatus::vacuous;
    } else {
        for (std::size_t j = 0; j < s; ++j)
            for (std::size_t k = 0; k < s; ++k)
                for (std::size_t l = 0; l < s; ++l) {
                    if (j == k || j == l || k == l) continue;
                    const RatMatrix lhs = (p[j] * p[k] * p[l] + p[l] * p[k] * p[j]) * plus[k];
                    detail::record(rep.triple, lhs.is_zero(), {j + 1, k + 1, l + 1});
                }
    }

    rep.all_pass = rep.involution.ok() && rep.triple.ok() && rep.pair.ok() && rep.symmetry.ok();
    return rep;
}

/// beta_k = sum_{j != k} 1 / (z_k - z_j)^2.
inline Rational beta(const KZSystem& sys, std::size_t k)
{
    const std::size_t kk = sys.index(k);
    Rational b(0);
    for (std::size_t j = 0; j < sys.s(); ++j) {
        if (j == kk) continue;
        const Rational d = sys.poles()[kk] - sys.poles()[j];
        b += Rational(1) / (d * d);
    }
    return b;
}

/// Exponent data at infinity. The spectrum is that of rho * T, so that at
/// rho = 1 the polynomial-degree predictions read deg Q1 = M_T, deg Q2 = -m_T.
struct DegreeBounds {
    RatMatrix T;
    IntegerSpectrum spectrum;
    bool all_integer = false;
    std::optional<std::int64_t> m_T;
    std::optional<std::int64_t> M_T;
    std::optional<int> deg_Q1;  // nullopt: Q1 = 0 (or unknown when !all_integer)
    std::optional<int> deg_Q2;
};

inline DegreeBounds degree_bounds(const KZSystem& sys)
{
    DegreeBounds out;
    out.T = infinity_form(sys).T;
    out.spectrum = integer_spectrum(Rational(sys.rho()) * out.T);
    out.all_integer = out.spectrum.all_integer;
    if (!out.all_integer) return out;
    out.m_T = out.spectrum.min();
    out.M_T = out.spectrum.max();
    if (*out.M_T >= 0) out.deg_Q1 = static_cast<int>(*out.M_T);
    if (*out.m_T <= 0) out.deg_Q2 = static_cast<int>(-*out.m_T);
    return out;
}

} // namespace kzrat

#endif // KZRAT_KZSYSTEM_HPP
