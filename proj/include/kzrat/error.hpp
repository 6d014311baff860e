#ifndef KZRAT_ERROR_HPP
#define KZRAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kzrat {

enum class errc {
    dimension_mismatch,
    non_square,
    bad_pole_index,
    center_mismatch,
    bad_seed,
    conditions_not_satisfied,
    invariant_violated,
    evaluation_at_pole,
    adjoint_not_found,
    bad_indices,
    pole_count_mismatch,
    duplicate_poles,
    no_integer_eigenvalues,
    invalid_system,
    truncation_exceeded,
    parse_error,
};

inline std::string_view to_string(errc e) noexcept
{
    switch (e) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::non_square: return "NonSquare";
    case errc::bad_pole_index: return "BadPoleIndex";
    case errc::center_mismatch: return "CenterMismatch";
    case errc::bad_seed: return "BadSeed";
    case errc::conditions_not_satisfied: return "ConditionsNotSatisfied";
    case errc::invariant_violated: return "InvariantViolated";
    case errc::evaluation_at_pole: return "EvaluationAtPole";
    case errc::adjoint_not_found: return "AdjointNotFound";
    case errc::bad_indices: return "BadIndices";
    case errc::pole_count_mismatch: return "PoleCountMismatch";
    case errc::duplicate_poles: return "DuplicatePoles";
    case errc::no_integer_eigenvalues: return "NoIntegerEigenvalues";
    case errc::invalid_system: return "InvalidSystem";
    case errc::truncation_exceeded: return "TruncationExceeded";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Error raised by every kzrat operation. Mathematical negatives (a failing
/// condition, a missing rational solution) are reported as values, not as
/// errors; this type is reserved for malformed input and broken invariants.
class kz_error : public std::runtime_error {
public:
    kz_error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace kzrat

#endif // KZRAT_ERROR_HPP
