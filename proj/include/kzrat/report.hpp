#ifndef KZRAT_REPORT_HPP
#define KZRAT_REPORT_HPP

#include <ostream>
#include <string>

#include "io.hpp"
#include "solver.hpp"
#include "symrep.hpp"

namespace kzrat::report {

using io::json;
using io::emit_matrix;

inline json witness_json(const ConditionResult& r)
{
    json j;
    j["status"] = std::string(to_string(r.status));
    j["instances"] = r.instances_checked;
    j["failures"] = r.failures;
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

inline json conditions_json(const ConditionReport& rep)
{
    json j;
    j["involution"] = witness_json(rep.involution);
    j["triple"] = witness_json(rep.triple);
    j["pair"] = witness_json(rep.pair);
    j["symmetry"] = witness_json(rep.symmetry);
    j["all_pass"] = rep.all_pass;
    return j;
}

inline json spectrum_json(const IntegerSpectrum& sp)
{
    json j;
    j["all_integer"] = sp.all_integer;
    j["integer_roots"] = json::array();
    for (const auto& r : sp.integer_roots) j["integer_roots"].push_back({{"value", r.value}, {"multiplicity", r.multiplicity}});
    j["characteristic_polynomial"] = json::array();
    for (const auto& c : sp.characteristic_polynomial) j["characteristic_polynomial"].push_back(format_rational(c));
    return j;
}

inline json degree_bounds_json(const DegreeBounds& db)
{
    json j;
    j["T"] = emit_matrix(db.T);
    j["spectrum_of_rho_T"] = spectrum_json(db.spectrum);
    j["all_integer"] = db.all_integer;
    j["m_T"] = db.m_T ? json(*db.m_T) : json(nullptr);
    j["M_T"] = db.M_T ? json(*db.M_T) : json(nullptr);
    j["deg_Q1"] = db.deg_Q1 ? json(*db.deg_Q1) : json("Q1 = 0");
    j["deg_Q2"] = db.deg_Q2 ? json(*db.deg_Q2) : json("Q2 = 0");
    if (!db.all_integer) {
        j["deg_Q1"] = nullptr;
        j["deg_Q2"] = nullptr;
    }
    return j;
}

inline json betas_json(const KZSystem& sys)
{
    json j = json::array();
    for (std::size_t k = 1; k <= sys.s(); ++k) j.push_back(format_rational(beta(sys, k)));
    return j;
}

inline json note(std::string id, std::string message, json claimed, json computed)
{
    return {{"id", std::move(id)}, {"message", std::move(message)}, {"claimed", std::move(claimed)},
            {"computed", std::move(computed)}};
}

/// Known mismatches between closed-form claims and exact computation. These
/// are informational and never turn a run into a failure.
inline json system_notes(const KZSystem& sys)
{
    json notes = json::array();
    if (!is_natural_representation(sys)) return notes;
    const std::size_t n = sys.n();
    const long nn = static_cast<long>(n);
    if (n >= 3) {
        const T1Decomposition t1 = t1_decomposition(n);
        json computed = json::array();
        for (const auto& r : t1.spectrum.integer_roots) computed.push_back({{"value", r.value}, {"multiplicity", r.multiplicity}});
        notes.push_back(note("natural-rep-T-spectrum",
                             "T = sum P(1,k+1) has eigenvalue n-2 with multiplicity n-2, not n-1 twice; m_T and M_T are unaffected",
                             json::array({nn - 1, nn - 1, -1}), std::move(computed)));
    }
    if (sys.rho() == 1) {
        const DegreeBounds db = degree_bounds(sys);
        notes.push_back(note("natural-rep-deg-Q2", "deg Q2 = -m_T = 1 for the natural representation, not -1", -1,
                             db.deg_Q2 ? json(*db.deg_Q2) : json(nullptr)));
    }
    return notes;
}

inline json check_report(const KZSystem& sys)
{
    json j;
    j["n"] = sys.n();
    j["s"] = sys.s();
    j["rho"] = sys.rho();
    j["conditions"] = conditions_json(check_conditions(sys));
    j["degree_bounds"] = degree_bounds_json(degree_bounds(sys));
    j["beta"] = betas_json(sys);
    j["notes"] = system_notes(sys);
    return j;
}

inline json local_report(const KZSystem& sys)
{
    json j;
    j["n"] = sys.n();
    j["rho"] = sys.rho();
    const bool seeds_available = (sys.rho() == 1 || sys.rho() == -1) && check_conditions(sys).all_pass;
    j["closed_form_seeds"] = seeds_available;
    json poles = json::array();
    json notes = json::array();
    for (std::size_t k = 1; k <= sys.s(); ++k) {
        json pj;
        pj["k"] = k;
        pj["pole"] = format_rational(sys.pole(k));
        pj["beta"] = format_rational(beta(sys, k));
        try {
            const ExponentBounds eb = exponent_bounds(sys.effective_residue(k));
            pj["m"] = eb.m;
            pj["M"] = eb.M;
        } catch (const kz_error& e) {
            pj["m"] = nullptr;
            pj["M"] = nullptr;
            pj["exponent_error"] = e.what();
        }
        if (seeds_available) {
            const CanonicalSeeds s = canonical_seeds(sys, k);
            pj["branch"] = s.beta_zero ? "beta_zero" : "beta_nonzero";
            pj["right_seeds"] = {{"b_-1", emit_matrix(s.right[0])}, {"b_0", emit_matrix(s.right[1])}, {"b_1", emit_matrix(s.right[2])}};
            pj["left_seeds"] = {{"c_-1", emit_matrix(s.left[0])}, {"c_0", emit_matrix(s.left[1])}, {"c_1", emit_matrix(s.left[2])}};
            bool right_ok = true;
            bool left_ok = true;
            for (const auto& r : recursion_residuals(sys, k, Side::right, -1, {s.right.begin(), s.right.end()})) right_ok = right_ok && r.is_zero();
            for (const auto& r : recursion_residuals(sys, k, Side::left, -1, {s.left.begin(), s.left.end()})) left_ok = left_ok && r.is_zero();
            pj["right_recursion_holds"] = right_ok;
            pj["left_recursion_holds"] = left_ok;
            RatMatrix prod;
            try {
                prod = product_invariant(sys, k);
                pj["product_invariant_matches"] = true;
            } catch (const invariant_violated& e) {
                prod = e.computed();
                pj["product_invariant_matches"] = false;
                notes.push_back(note("product-invariant", "b_0 c_0 + b_-1 c_1 + b_1 c_-1 at z_" + std::to_string(k) +
                                                              " equals -2 beta_k P_k, not 2 beta_k I",
                                     "2*beta*I", emit_matrix(prod)));
            }
            pj["product_invariant"] = emit_matrix(prod);
            pj["product_invariant_det"] = format_rational(prod.det());
        }
        poles.push_back(std::move(pj));
    }
    j["poles"] = std::move(poles);
    j["notes"] = std::move(notes);
    return j;
}

inline json verification_json(const VerificationRecord& v)
{
    json j;
    j["side"] = std::string(to_string(v.side));
    j["residual_zero"] = v.residual_zero;
    j["fundamental"] = v.fundamental;
    j["det_samples"] = json::array();
    for (const auto& d : v.det_samples)
        j["det_samples"].push_back({{"z", format_rational(d.point)}, {"det", format_rational(d.det)}});
    j["poly_degree"] = v.poly_degree ? json(*v.poly_degree) : json(nullptr);
    j["predicted_poly_degree"] = v.predicted_poly_degree ? json(*v.predicted_poly_degree) : json(nullptr);
    j["pole_orders"] = json::array();
    for (const auto& p : v.pole_orders)
        j["pole_orders"].push_back({{"pole", format_rational(p.pole)},
                                    {"observed", p.observed},
                                    {"predicted", p.predicted ? json(*p.predicted) : json(nullptr)}});
    if (!v.stray_poles.empty()) {
        j["stray_poles"] = json::array();
        for (const auto& p : v.stray_poles) j["stray_poles"].push_back(format_rational(p));
    }
    j["degrees_match"] = v.degrees_match;
    j["passed"] = v.passed();
    return j;
}

inline json solve_json(const SolveOutcome& o)
{
    json j;
    j["status"] = std::string(to_string(o.status));
    j["reason"] = o.reason;
    j["kernel_dimension"] = o.kernel_dimension;
    j["pole_order_used"] = o.pole_order_used;
    j["poly_degree_used"] = o.poly_degree_used;
    j["capped"] = o.capped;
    j["exploratory"] = o.exploratory;
    j["attempts"] = o.attempts;
    if (o.W) {
        j["deg_Q1"] = o.W->poly_degree() ? json(*o.W->poly_degree()) : json("Q1 = 0");
    }
    if (o.certificate) j["certificate"] = verification_json(*o.certificate);
    return j;
}

namespace detail {

inline bool is_matrix(const json& v)
{
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v) {
        if (!row.is_array() || row.empty()) return false;
        for (const auto& e : row)
            if (!e.is_string()) return false;
    }
    return true;
}

inline std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void render(std::ostream& os, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            const bool nested = val.is_array() && !val.empty() && !val.front().is_primitive();
            if (val.is_object() || nested) {
                os << pad << key << ":\n";
                render(os, val, indent + 2);
            } else if (val.is_array()) {
                os << pad << key << ": [";
                for (std::size_t i = 0; i < val.size(); ++i) os << (i ? ", " : "") << scalar(val[i]);
                os << "]\n";
            } else {
                os << pad << key << ": " << scalar(val) << '\n';
            }
        }
    } else if (is_matrix(v)) {
        std::size_t width = 0;
        for (const auto& row : v)
            for (const auto& e : row) width = std::max(width, e.get<std::string>().size());
        for (const auto& row : v) {
            os << pad << "[ ";
            for (const auto& e : row) {
                const std::string s = e.get<std::string>();
                os << std::string(width - s.size(), ' ') << s << ' ';
            }
            os << "]\n";
        }
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            os << pad << "- [" << i << "]\n";
            render(os, v[i], indent + 2);
        }
    } else {
        os << pad << scalar(v) << '\n';
    }
}

} // namespace detail

/// Human-readable rendering of a report. It walks the same JSON value that
/// --json prints, so both forms carry the same numbers.
inline void render_text(std::ostream& os, const json& report) { detail::render(os, report, 0); }

} // namespace kzrat::report

#endif // KZRAT_REPORT_HPP
