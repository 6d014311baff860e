// kzrat: command-line front end for KZ-type Fuchsian systems over Q.
//
// Exit status: 0 success/pass, 1 mathematical negative (conditions fail,
// no rational solution, verification failure), 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <kzrat/kzrat.hpp>
#include <kzrat/report.hpp>

namespace {

using namespace kzrat;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct GlobalOptions {
    bool json_output = false;
    std::uint64_t seed = default_seed;
};

void print_report(const GlobalOptions& g, const json& rep)
{
    if (g.json_output)
        std::cout << rep.dump(2) << '\n';
    else
        report::render_text(std::cout, rep);
}

void write_json(const std::string& path, const json& j)
{
    if (path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw kz_error(errc::parse_error, "cannot write " + path);
    out << j.dump(2) << '\n';
}

KZSystem load_system(const std::string& path) { return io::parse_system_text(io::read_file(path)).to_system(); }

std::vector<Rational> parse_pole_list(const std::string& text)
{
    std::vector<Rational> poles;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw kz_error(errc::parse_error, "empty entry in pole list '" + text + "'");
        poles.push_back(parse_rational(item.substr(first, last - first + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return poles;
}

int cmd_gen_sn(const GlobalOptions&, std::size_t n, const std::string& poles, int rho, const std::string& output)
{
    const KZSystem sys = natural_kz_system(n, parse_pole_list(poles), rho);
    const auto doc = io::SystemDocument::from_system(sys, "natural representation of S_" + std::to_string(n),
                                                     "residues P_k = P(1, k+1)");
    write_json(output, io::emit_system(doc));
    return exit_ok;
}

int cmd_check(const GlobalOptions& g, const std::string& input)
{
    const KZSystem sys = load_system(input);
    const json rep = report::check_report(sys);
    print_report(g, rep);
    return rep["conditions"]["all_pass"].get<bool>() ? exit_ok : exit_negative;
}

struct SolveFlags {
    int max_pole_order = 1;
    std::string max_poly_degree = "auto";
    std::string emit_solution;
    bool adjoint = false;
    std::string emit_adjoint;
};

int cmd_solve(const GlobalOptions& g, const std::string& input, const SolveFlags& f)
{
    const KZSystem sys = load_system(input);
    SolveOptions opt;
    opt.max_pole_order = f.max_pole_order;
    opt.seed = g.seed;
    if (f.max_poly_degree != "auto") {
        try {
            opt.max_poly_degree = std::stoi(f.max_poly_degree);
        } catch (const std::exception&) {
            throw kz_error(errc::parse_error, "--max-poly-degree expects an integer or 'auto'");
        }
    }
    if (sys.rho() != 1 && sys.rho() != -1)
        std::cerr << "warning: |rho| > 1 is exploratory; rational solvability is only guaranteed for rho = +1 or -1\n";

    const SolveOutcome out = solve_rational(sys, opt);
    json rep;
    rep["n"] = sys.n();
    rep["rho"] = sys.rho();
    rep["solve"] = report::solve_json(out);
    rep["degree_bounds"] = report::degree_bounds_json(degree_bounds(sys));
    rep["notes"] = report::system_notes(sys);

    int status = out.status == SolveStatus::found ? exit_ok : exit_negative;
    if (out.W && !f.emit_solution.empty())
        write_json(f.emit_solution, io::emit_solution({"right", sys.rho(), *out.W}));

    if (out.W && (f.adjoint || !f.emit_adjoint.empty())) {
        try {
            const RatMatFunc y = adjoint_solution(sys, *out.W, opt);
            const RatMatFunc wy = rmf_mul(*out.W, y);
            json adj;
            adj["found"] = true;
            adj["deg_Q2"] = y.poly_degree() ? json(*y.poly_degree()) : json("Q2 = 0");
            adj["W_times_Y"] = io::emit_matrix(wy.poly_coeff(0));
            adj["W_times_Y_constant"] = wy.is_constant();
            adj["certificate"] = report::verification_json(verify_left(sys, y, g.seed));
            rep["adjoint"] = std::move(adj);
            if (!f.emit_adjoint.empty()) write_json(f.emit_adjoint, io::emit_solution({"left", sys.rho(), y}));
        } catch (const kz_error& e) {
            rep["adjoint"] = {{"found", false}, {"reason", e.what()}};
            status = exit_negative;
        }
    }
    print_report(g, rep);
    return status;
}

int cmd_verify(const GlobalOptions& g, const std::string& system_path, const std::string& solution_path)
{
    const KZSystem sys = load_system(system_path);
    const io::SolutionDocument sol = io::parse_solution_text(io::read_file(solution_path));
    if (sol.function.rows() != sys.n() || sol.function.cols() != sys.n())
        throw kz_error(errc::dimension_mismatch, "solution is " + std::to_string(sol.function.rows()) + "x" +
                                                     std::to_string(sol.function.cols()) + ", system has n = " +
                                                     std::to_string(sys.n()));
    if (sol.rho != sys.rho())
        std::cerr << "warning: solution was written for rho = " << sol.rho << ", verifying against rho = " << sys.rho()
                  << '\n';
    const VerificationRecord rec =
        sol.side == "left" ? verify_left(sys, sol.function, g.seed) : verify(sys, sol.function, g.seed);
    json rep;
    rep["n"] = sys.n();
    rep["rho"] = sys.rho();
    rep["certificate"] = report::verification_json(rec);
    print_report(g, rep);
    return rec.passed() ? exit_ok : exit_negative;
}

int cmd_local(const GlobalOptions& g, const std::string& input)
{
    const KZSystem sys = load_system(input);
    print_report(g, report::local_report(sys));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational solutions of KZ-type Fuchsian systems dW/dz = rho A(z) W over Q"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_flag("--json", g.json_output, "Print one machine-readable JSON document");
    app.add_option("--seed", g.seed, "Seed for sample points and the kernel search")->capture_default_str();

    std::size_t n = 0;
    std::string poles;
    int rho = 1;
    std::string output = "-";
    auto* gen = app.add_subcommand("gen-sn", "Write the natural-representation system of S_n");
    gen->add_option("-n,--n", n, "Dimension n >= 2")->required();
    gen->add_option("--poles", poles, "Comma-separated n-1 distinct rationals, e.g. 0,1/2,-3")->required();
    gen->add_option("--rho", rho, "Nonzero integer multiplier")->capture_default_str();
    gen->add_option("-o,--output", output, "Output path ('-' for stdout)")->capture_default_str();

    std::string input;
    auto* check = app.add_subcommand("check", "Check the rational-solvability conditions and degree bounds");
    check->add_option("input", input, "System document")->required();

    SolveFlags sf;
    auto* solve = app.add_subcommand("solve", "Construct and verify a rational fundamental solution");
    solve->add_option("input", input, "System document")->required();
    solve->add_option("--max-pole-order", sf.max_pole_order, "Pole order of the ansatz")->capture_default_str();
    solve->add_option("--max-poly-degree", sf.max_poly_degree, "Polynomial degree of the ansatz, or 'auto'")
        ->capture_default_str();
    solve->add_option("--emit-solution", sf.emit_solution, "Write W as a solution document");
    solve->add_flag("--adjoint", sf.adjoint, "Also construct Y solving dY/dz = -rho Y A with W Y = I");
    solve->add_option("--emit-adjoint", sf.emit_adjoint, "Write Y as a solution document (implies --adjoint)");

    std::string solution;
    auto* verify_cmd = app.add_subcommand("verify", "Independently verify a solution document");
    verify_cmd->add_option("system", input, "System document")->required();
    verify_cmd->add_option("solution", solution, "Solution document")->required();

    auto* local = app.add_subcommand("local", "Dump per-pole exponents, seeds and product invariants");
    local->add_option("input", input, "System document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) return cmd_gen_sn(g, n, poles, rho, output);
        if (*check) return cmd_check(g, input);
        if (*solve) return cmd_solve(g, input, sf);
        if (*verify_cmd) return cmd_verify(g, input, solution);
        if (*local) return cmd_local(g, input);
    } catch (const kz_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
