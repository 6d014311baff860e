#ifndef KZRAT_SYSTEM_HPP
#define KZRAT_SYSTEM_HPP

#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace kzrat {

/// dW/dz = rho * A(z) W with A(z) = sum_k P_k / (z - z_k).
///
/// Poles and residues are addressed 1-based (k = 1..s) throughout the public
/// interface.
class KZSystem {
public:
    KZSystem(std::vector<Rational> poles, std::vector<RatMatrix> residues, int rho)
        : poles_(std::move(poles)), residues_(std::move(residues)), rho_(rho)
    {
        if (poles_.empty()) throw kz_error(errc::invalid_system, "a system needs at least one pole");
        if (poles_.size() != residues_.size())
            throw kz_error(errc::pole_count_mismatch,
                           std::to_string(poles_.size()) + " poles but " + std::to_string(residues_.size()) + " residues");
        if (rho_ == 0) throw kz_error(errc::invalid_system, "rho must be a nonzero integer");
        n_ = residues_.front().rows();
        if (n_ == 0) throw kz_error(errc::invalid_system, "empty residue matrix");
        for (std::size_t k = 0; k < residues_.size(); ++k)
            if (residues_[k].rows() != n_ || residues_[k].cols() != n_)
                throw kz_error(errc::dimension_mismatch, "residue " + std::to_string(k + 1) + " is not " +
                                                             std::to_string(n_) + "x" + std::to_string(n_));
        for (std::size_t i = 0; i < poles_.size(); ++i)
            for (std::size_t j = i + 1; j < poles_.size(); ++j)
                if (poles_[i] == poles_[j])
                    throw kz_error(errc::duplicate_poles, "z_" + std::to_string(i + 1) + " = z_" + std::to_string(j + 1) +
                                                              " = " + format_rational(poles_[i]));
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t s() const noexcept { return poles_.size(); }
    int rho() const noexcept { return rho_; }
    const std::vector<Rational>& poles() const noexcept { return poles_; }
    const std::vector<RatMatrix>& residues() const noexcept { return residues_; }

    const Rational& pole(std::size_t k) const { return poles_[index(k)]; }
    const RatMatrix& residue(std::size_t k) const { return residues_[index(k)]; }

    /// rho * P_k, the residue that governs local exponents at z_k.
    RatMatrix effective_residue(std::size_t k) const { return Rational(rho_) * residue(k); }

    /// Maps 1-based k to a storage index, throwing BadPoleIndex when out of range.
    std::size_t index(std::size_t k) const
    {
        if (k < 1 || k > poles_.size())
            throw kz_error(errc::bad_pole_index, "pole index " + std::to_string(k) + " outside 1.." + std::to_string(s()));
        return k - 1;
    }

    /// A(z) at a non-pole point (without the rho factor).
    RatMatrix coefficient_at(const Rational& z) const
    {
        RatMatrix a(n_, n_);
        for (std::size_t k = 0; k < poles_.size(); ++k) {
            if (z == poles_[k]) throw kz_error(errc::evaluation_at_pole, "A(z) at z = " + format_rational(z));
            a += residues_[k] * (Rational(1) / (z - poles_[k]));
        }
        return a;
    }

    bool is_pole(const Rational& z) const
    {
        for (const auto& p : poles_)
            if (p == z) return true;
        return false;
    }

    KZSystem with_rho(int rho) const { return KZSystem(poles_, residues_, rho); }

private:
    std::vector<Rational> poles_;
    std::vector<RatMatrix> residues_;
    int rho_;
    std::size_t n_ = 0;
};

} // namespace kzrat

#endif // KZRAT_SYSTEM_HPP
