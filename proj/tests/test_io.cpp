#include <catch_amalgamated.hpp>

#include <kzrat/io.hpp>
#include <kzrat/report.hpp>
#include <kzrat/symrep.hpp>

#include <sstream>

using namespace kzrat;
using io::json;

namespace {

std::string error_location(const std::string& text)
{
    try {
        io::parse_system_text(text);
    } catch (const io::document_error& e) {
        return e.location();
    }
    return "";
}

} // namespace

TEST_CASE("system documents round-trip", "[io]")
{
    const KZSystem sys({make_rational(-7, 3), Rational(Integer("123456789012345678901234567890"))},
                       {transposition_matrix({3, 1, 2}), RatMatrix{{make_rational(-1, 2), 0, 0}, {0, 1, 0}, {0, 0, 1}}}, -2);
    const auto doc = io::SystemDocument::from_system(sys, "label", "provenance");
    const json j = io::emit_system(doc);
    CHECK(j["poles"][0] == "-7/3");
    CHECK(j["residues"][1][0][0] == "-1/2");
    CHECK(io::parse_system_text(j.dump()) == doc);
    CHECK(io::parse_system_text(j.dump(2)) == doc);
}

TEST_CASE("system document errors", "[io]")
{
    const std::string good =
        R"({"kind":"kz-system","n":2,"rho":1,"poles":["0"],"residues":[[["0","1"],["1","0"]]]})";
    CHECK_NOTHROW(io::parse_system_text(good));
    CHECK(io::parse_system_text(R"({"n":2,"rho":1,"poles":[0],"residues":[[[0,1],[1,0]]]})").n == 2);

    CHECK(error_location(R"({"n":2,"rho":1,"residues":[]})") == "/poles");
    CHECK(error_location(R"({"n":2,"rho":1,"poles":["x"],"residues":[[["0","1"],["1","0"]]]})") == "/poles/0");
    CHECK(error_location(R"({"n":2,"rho":1,"poles":["0"],"residues":[[["0","1"],["1"]]]})") == "/residues/0/1");
    CHECK(error_location(R"({"n":2,"rho":0,"poles":["0"],"residues":[[["0","1"],["1","0"]]]})") == "/rho");
    CHECK(error_location(R"({"n":2,"rho":1,"poles":["0.5"],"residues":[[["0","1"],["1","0"]]]})") == "/poles/0");
    CHECK(error_location(R"({"kind":"kz-solution","n":2})") == "/kind");
    CHECK(error_location("{\n  \"n\": 2,\n  \"rho\": 1,,\n}") == "line 3, column 12");

    try {
        io::parse_system_text(R"({"n":2,"rho":1,"poles":["1","1"],"residues":[[["0","1"],["1","0"]],[["0","1"],["1","0"]]]})");
        FAIL("duplicate poles accepted");
    } catch (const kz_error& e) {
        CHECK(e.code() == errc::duplicate_poles);
    }
}

TEST_CASE("solution documents round-trip", "[io]")
{
    RatMatFunc f(2, 2);
    f.add_pole_term(make_rational(-3, 4), 2, RatMatrix{{1, make_rational(-5, 7)}, {0, 2}});
    f.add_pole_term(Rational(1), 1, RatMatrix::identity(2));
    f.add_poly_term(3, RatMatrix{{0, 1}, {1, 0}});
    const io::SolutionDocument doc{"left", -1, f};
    const json j = io::emit_solution(doc);
    const io::SolutionDocument back = io::parse_solution_text(j.dump());
    CHECK(back == doc);
    CHECK(back.function.pole_order(make_rational(-3, 4)) == 2);
    CHECK(j["poly_part"].size() == 4);

    CHECK_THROWS_AS(io::parse_solution_text(R"({"side":"up","rows":1,"cols":1,"pole_parts":[],"poly_part":[]})"),
                    io::document_error);
    CHECK_THROWS_AS(io::parse_solution_text(R"({"rows":1,"cols":1,"pole_parts":[{"pole":"0"}],"poly_part":[]})"),
                    io::document_error);
}

TEST_CASE("reports", "[io]")
{
    SECTION("check report with notes")
    {
        const json rep = report::check_report(natural_kz_system(4, {0, 1, 2}, 1));
        CHECK(rep["conditions"]["all_pass"] == true);
        CHECK(rep["degree_bounds"]["m_T"] == -1);
        CHECK(rep["degree_bounds"]["M_T"] == 3);
        REQUIRE(rep["notes"].size() == 2);
        CHECK(rep["notes"][0]["id"] == "natural-rep-T-spectrum");
        CHECK(rep["notes"][1]["id"] == "natural-rep-deg-Q2");
        CHECK(rep["notes"][1]["computed"] == 1);
    }
    SECTION("failing condition carries a witness")
    {
        RatMatrix p = transposition_matrix({3, 1, 3});
        p(0, 0) = 2;
        const KZSystem sys({Rational(0), Rational(1)}, {transposition_matrix({3, 1, 2}), p}, 1);
        const json rep = report::check_report(sys);
        CHECK(rep["conditions"]["all_pass"] == false);
        CHECK(rep["conditions"]["involution"]["witness"] == json::array({2}));
        CHECK(rep["notes"].empty());
    }
    SECTION("single pole conditions are vacuous")
    {
        const json rep = report::check_report(natural_kz_system(2, {0}, 1));
        CHECK(rep["conditions"]["pair"]["status"] == "vacuous");
        CHECK(rep["conditions"]["triple"]["status"] == "vacuous");
    }
    SECTION("local report")
    {
        const json rep = report::local_report(natural_kz_system(3, {0, 1}, 1));
        REQUIRE(rep["poles"].size() == 2);
        CHECK(rep["poles"][0]["m"] == -1);
        CHECK(rep["poles"][0]["M"] == 1);
        CHECK(rep["poles"][0]["right_recursion_holds"] == true);
        CHECK(rep["poles"][0]["left_recursion_holds"] == true);
        CHECK(rep["poles"][0]["product_invariant_matches"] == false);
        CHECK(rep["notes"].size() == 2);
    }
    SECTION("text rendering shows the JSON numbers")
    {
        const json rep = report::check_report(natural_kz_system(3, {0, 1}, 1));
        std::ostringstream os;
        report::render_text(os, rep);
        const std::string text = os.str();
        CHECK(text.find("all_pass: true") != std::string::npos);
        CHECK(text.find("M_T: 2") != std::string::npos);
        CHECK(text.find("natural-rep-deg-Q2") != std::string::npos);
    }
}
