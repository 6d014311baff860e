#ifndef KZRAT_IO_HPP
#define KZRAT_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ratfunc.hpp"
#include "system.hpp"

namespace kzrat::io {

using json = nlohmann::json;

/// Parse failure located either by line/column (syntax) or by a JSON
/// pointer to the offending field.
class document_error : public kz_error {
public:
    document_error(std::string location, const std::string& what)
        : kz_error(errc::parse_error, location + ": " + what), location_(std::move(location))
    {
    }

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

inline constexpr std::string_view system_kind = "kz-system";
inline constexpr std::string_view solution_kind = "kz-solution";

struct SystemDocument {
    std::size_t n = 0;
    int rho = 1;
    std::vector<Rational> poles;
    std::vector<RatMatrix> residues;
    std::string label;
    std::string provenance;

    KZSystem to_system() const { return KZSystem(poles, residues, rho); }

    static SystemDocument from_system(const KZSystem& sys, std::string label = {}, std::string provenance = {})
    {
        return {sys.n(), sys.rho(), sys.poles(), sys.residues(), std::move(label), std::move(provenance)};
    }

    friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

/// W (side right) or Y (side left) in partial-fraction form.
struct SolutionDocument {
    std::string side = "right";
    int rho = 1;
    RatMatFunc function{0, 0};

    friend bool operator==(const SolutionDocument&, const SolutionDocument&) = default;
};

inline json emit_matrix(const RatMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_rational(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
inline std::string child(const std::string& ptr, std::size_t idx) { return ptr + "/" + std::to_string(idx); }

inline const json& field(const json& obj, std::string_view key, const std::string& ptr)
{
    if (!obj.is_object()) throw document_error(ptr.empty() ? "/" : ptr, "expected an object");
    auto it = obj.find(std::string(key));
    if (it == obj.end()) throw document_error(child(ptr, key), "missing field");
    return *it;
}

inline Rational parse_scalar(const json& v, const std::string& ptr)
{
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const kz_error& e) {
            throw document_error(ptr, e.what());
        }
    }
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    throw document_error(ptr, "expected an exact rational string \"p/q\"");
}

inline long parse_int(const json& v, const std::string& ptr)
{
    if (!v.is_number_integer()) throw document_error(ptr, "expected an integer");
    return v.get<long>();
}

inline RatMatrix parse_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& ptr)
{
    if (!v.is_array() || v.size() != rows)
        throw document_error(ptr, "expected an array of " + std::to_string(rows) + " rows");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = v[i];
        const std::string rp = child(ptr, i);
        if (!row.is_array() || row.size() != cols)
            throw document_error(rp, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_scalar(row[j], child(rp, j));
    }
    return m;
}

inline std::string line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline void check_kind(const json& doc, std::string_view kind)
{
    if (!doc.is_object()) throw document_error("/", "expected a JSON object");
    auto it = doc.find("kind");
    if (it != doc.end() && (!it->is_string() || it->get<std::string>() != kind))
        throw document_error("/kind", "expected \"" + std::string(kind) + "\"");
}

} // namespace detail

/// Parses JSON text, mapping syntax errors to a line/column location.
inline json parse_json_text(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw document_error(detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw document_error(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json emit_system(const SystemDocument& doc)
{
    json j;
    j["kind"] = system_kind;
    j["n"] = doc.n;
    j["rho"] = doc.rho;
    j["poles"] = json::array();
    for (const auto& p : doc.poles) j["poles"].push_back(format_rational(p));
    j["residues"] = json::array();
    for (const auto& r : doc.residues) j["residues"].push_back(emit_matrix(r));
    if (!doc.label.empty() || !doc.provenance.empty()) {
        j["metadata"] = json::object();
        if (!doc.label.empty()) j["metadata"]["label"] = doc.label;
        if (!doc.provenance.empty()) j["metadata"]["provenance"] = doc.provenance;
    }
    return j;
}

/// Parses and validates a system document. Structural problems raise
/// document_error with a JSON pointer; mathematical invalidity (duplicate
/// poles, rho = 0) raises the corresponding kz_error.
inline SystemDocument parse_system(const json& j)
{
    using namespace detail;
    check_kind(j, system_kind);
    SystemDocument doc;
    const long n = parse_int(field(j, "n", ""), "/n");
    if (n < 1) throw document_error("/n", "n must be positive");
    doc.n = static_cast<std::size_t>(n);
    const long rho = parse_int(field(j, "rho", ""), "/rho");
    if (rho == 0) throw document_error("/rho", "rho must be a nonzero integer");
    doc.rho = static_cast<int>(rho);

    const json& poles = field(j, "poles", "");
    if (!poles.is_array() || poles.empty()) throw document_error("/poles", "expected a nonempty array");
    for (std::size_t i = 0; i < poles.size(); ++i) doc.poles.push_back(parse_scalar(poles[i], child("/poles", i)));

    const json& res = field(j, "residues", "");
    if (!res.is_array() || res.size() != poles.size())
        throw document_error("/residues", "expected " + std::to_string(poles.size()) + " residue matrices");
    for (std::size_t k = 0; k < res.size(); ++k)
        doc.residues.push_back(parse_matrix(res[k], doc.n, doc.n, child("/residues", k)));

    if (auto it = j.find("metadata"); it != j.end()) {
        if (!it->is_object()) throw document_error("/metadata", "expected an object");
        if (auto l = it->find("label"); l != it->end() && l->is_string()) doc.label = l->get<std::string>();
        if (auto p = it->find("provenance"); p != it->end() && p->is_string()) doc.provenance = p->get<std::string>();
    }
    (void)doc.to_system();
    return doc;
}

inline SystemDocument parse_system_text(std::string_view text) { return parse_system(parse_json_text(text)); }

inline json emit_solution(const SolutionDocument& doc)
{
    const RatMatFunc& f = doc.function;
    json j;
    j["kind"] = solution_kind;
    j["side"] = doc.side;
    j["rho"] = doc.rho;
    j["rows"] = f.rows();
    j["cols"] = f.cols();
    j["pole_parts"] = json::array();
    for (const auto& [a, cs] : f.pole_parts()) {
        json part;
        part["pole"] = format_rational(a);
        part["coefficients"] = json::array();
        for (const auto& c : cs) part["coefficients"].push_back(emit_matrix(c));
        j["pole_parts"].push_back(std::move(part));
    }
    j["poly_part"] = json::array();
    for (const auto& q : f.poly_part()) j["poly_part"].push_back(emit_matrix(q));
    return j;
}

inline SolutionDocument parse_solution(const json& j)
{
    using namespace detail;
    check_kind(j, solution_kind);
    SolutionDocument doc;
    if (auto it = j.find("side"); it != j.end()) {
        if (!it->is_string() || (*it != "right" && *it != "left")) throw document_error("/side", "expected \"right\" or \"left\"");
        doc.side = it->get<std::string>();
    }
    if (auto it = j.find("rho"); it != j.end()) doc.rho = static_cast<int>(parse_int(*it, "/rho"));
    const long rows = parse_int(field(j, "rows", ""), "/rows");
    const long cols = parse_int(field(j, "cols", ""), "/cols");
    if (rows < 1 || cols < 1) throw document_error("/rows", "dimensions must be positive");
    const auto r = static_cast<std::size_t>(rows);
    const auto c = static_cast<std::size_t>(cols);
    RatMatFunc f(r, c);

    const json& parts = field(j, "pole_parts", "");
    if (!parts.is_array()) throw document_error("/pole_parts", "expected an array");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string ptr = child("/pole_parts", i);
        const Rational a = parse_scalar(field(parts[i], "pole", ptr), child(ptr, "pole"));
        const json& cs = field(parts[i], "coefficients", ptr);
        if (!cs.is_array()) throw document_error(child(ptr, "coefficients"), "expected an array");
        for (std::size_t p = 0; p < cs.size(); ++p)
            f.add_pole_term(a, static_cast<int>(p) + 1, parse_matrix(cs[p], r, c, child(child(ptr, "coefficients"), p)));
    }
    const json& poly = field(j, "poly_part", "");
    if (!poly.is_array()) throw document_error("/poly_part", "expected an array");
    for (std::size_t d = 0; d < poly.size(); ++d)
        f.add_poly_term(static_cast<int>(d), parse_matrix(poly[d], r, c, child("/poly_part", d)));
    doc.function = std::move(f);
    return doc;
}

inline SolutionDocument parse_solution_text(std::string_view text) { return parse_solution(parse_json_text(text)); }

} // namespace kzrat::io

#endif // KZRAT_IO_HPP
