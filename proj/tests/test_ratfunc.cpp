#include <catch_amalgamated.hpp>

#include <kzrat/solver.hpp>
#include <kzrat/symrep.hpp>

using namespace kzrat;

namespace {

const RatMatrix swap2{{0, 1}, {1, 0}};
const RatMatrix id2 = RatMatrix::identity(2);

// Columns (z, z)^T and (1/z, -1/z)^T.
RatMatFunc worked_w()
{
    RatMatFunc w(2, 2);
    w.add_pole_term(Rational(0), 1, RatMatrix{{0, 1}, {0, -1}});
    w.add_poly_term(1, RatMatrix{{1, 0}, {1, 0}});
    return w;
}

RatMatFunc pole(const Rational& a, int order, const RatMatrix& c)
{
    RatMatFunc f(c.rows(), c.cols());
    f.add_pole_term(a, order, c);
    return f;
}

RatMatFunc mono(int d, const RatMatrix& c)
{
    RatMatFunc f(c.rows(), c.cols());
    f.add_poly_term(d, c);
    return f;
}

} // namespace

TEST_CASE("evaluation", "[ratfunc]")
{
    CHECK(rmf_eval(pole(0, 1, id2), 2) == make_rational(1, 2) * id2);
    CHECK(rmf_eval(mono(1, id2) + pole(1, 1, id2), 2) == RatMatrix::scalar(2, 3));
    CHECK(rmf_eval(worked_w(), 1) == RatMatrix{{1, 1}, {1, -1}});
    CHECK_THROWS_AS(rmf_eval(worked_w(), 0), kz_error);
}

TEST_CASE("products in partial fractions", "[ratfunc]")
{
    CHECK(rmf_mul(pole(0, 1, id2), pole(1, 1, id2)) == pole(1, 1, id2) - pole(0, 1, id2));
    CHECK(rmf_mul(pole(0, 1, id2), pole(0, 1, id2)) == pole(0, 2, id2));
    CHECK(rmf_mul(mono(1, id2), pole(0, 1, id2)) == RatMatFunc::constant(id2));
    // z^2 / (z - 3) = z + 3 + 9/(z - 3)
    CHECK(rmf_mul(mono(2, id2), pole(3, 1, id2)) == mono(1, id2) + mono(0, RatMatrix::scalar(2, 3)) + pole(3, 1, RatMatrix::scalar(2, 9)));
    CHECK_THROWS_AS(rmf_mul(mono(0, id2), mono(0, RatMatrix::identity(3))), kz_error);
}

TEST_CASE("derivative", "[ratfunc]")
{
    CHECK(rmf_diff(pole(0, 1, id2)) == Rational(-1) * pole(0, 2, id2));
    CHECK(rmf_diff(mono(2, swap2)) == mono(1, RatMatrix::scalar(2, 2) * swap2));
    CHECK(rmf_diff(pole(1, 2, swap2)) == pole(1, 3, Rational(-2) * swap2));
    CHECK(rmf_diff(RatMatFunc::constant(swap2)).is_zero());
}

TEST_CASE("structure", "[ratfunc]")
{
    RatMatFunc f(2, 2);
    f.add_pole_term(5, 3, swap2);
    f.add_pole_term(5, 3, -swap2);
    CHECK(f.is_zero());
    CHECK(f.pole_order(5) == 0);
    f.add_poly_term(2, id2);
    CHECK(*f.poly_degree() == 2);
    CHECK_FALSE(RatMatFunc(2, 2).poly_degree());
    CHECK(worked_w().transpose().transpose() == worked_w());
}

TEST_CASE("expansions", "[ratfunc]")
{
    const RatMatFunc w = worked_w();
    const MatLaurent at0 = rmf_expand_at(w, 0, 2);
    CHECK(at0.min_order() == -1);
    CHECK(at0.coeff(-1) == RatMatrix{{0, 1}, {0, -1}});
    CHECK(at0.coeff(1) == RatMatrix{{1, 0}, {1, 0}});
    const MatLaurent at_inf = rmf_expand_at_infinity(w, 2);
    CHECK(at_inf.min_order() == -1);
    CHECK(at_inf.coeff(1) == RatMatrix{{0, 1}, {0, -1}});
    // 1/(z - 2) around z = 1: -(1 + h + h^2 + ...)
    const MatLaurent g = rmf_expand_at(pole(2, 1, id2), 1, 3);
    for (int e = 0; e <= 3; ++e) CHECK(g.coeff(e) == -id2);
}

TEST_CASE("verification", "[ratfunc]")
{
    const KZSystem sys({Rational(0)}, {swap2}, 1);
    SECTION("worked solution")
    {
        const VerificationRecord v = verify(sys, worked_w());
        CHECK(v.residual_zero);
        CHECK(v.fundamental);
        CHECK(v.passed());
        CHECK(rmf_eval(worked_w(), 2).det() == -2);
        CHECK(*v.poly_degree == 1);
        CHECK(v.degrees_match);
    }
    SECTION("constant identity is not a solution")
    {
        const VerificationRecord v = verify(sys, RatMatFunc::constant(id2));
        CHECK_FALSE(v.residual_zero);
        CHECK_FALSE(v.passed());
    }
    SECTION("zero solves but is not fundamental")
    {
        const VerificationRecord v = verify(sys, RatMatFunc(2, 2));
        CHECK(v.residual_zero);
        CHECK_FALSE(v.fundamental);
        CHECK_FALSE(v.passed());
        for (const auto& s : v.det_samples) CHECK(s.det == 0);
        CHECK(v.det_samples.size() >= 2);
    }
}

TEST_CASE("solver", "[ratfunc]")
{
    SECTION("single transposition")
    {
        const KZSystem sys({Rational(0)}, {swap2}, 1);
        const SolveOutcome out = solve_rational(sys);
        REQUIRE(out.status == SolveStatus::found);
        CHECK(out.kernel_dimension == 2);
        CHECK(*out.W->poly_degree() == 1);
        CHECK(verify(sys, *out.W).passed());
    }
    SECTION("S_3")
    {
        const KZSystem sys = natural_kz_system(3, {0, 1}, 1);
        const SolveOutcome out = solve_rational(sys);
        REQUIRE(out.status == SolveStatus::found);
        CHECK(*out.W->poly_degree() == 2);
        CHECK(out.certificate->residual_zero);
    }
    SECTION("half-integer residue")
    {
        const KZSystem sys({Rational(0)}, {RatMatrix::scalar(2, make_rational(1, 2))}, 1);
        const SolveOutcome out = solve_rational(sys);
        CHECK(out.status == SolveStatus::not_found);
        CHECK(out.reason.find("no integer local exponents") != std::string::npos);
        CHECK_FALSE(out.W);
    }
    SECTION("capped ansatz is inconclusive")
    {
        const KZSystem sys = natural_kz_system(3, {0, 1}, 1);
        SolveOptions opt;
        opt.max_poly_degree = 0;
        const SolveOutcome out = solve_rational(sys, opt);
        CHECK(out.status == SolveStatus::conditions_unknown);
        CHECK(out.capped);
    }
    SECTION("local and global pictures agree")
    {
        const KZSystem sys = natural_kz_system(4, {make_rational(1, 2), -1, 3}, 1);
        const SolveOutcome out = solve_rational(sys);
        REQUIRE(out.status == SolveStatus::found);
        for (std::size_t k = 1; k <= sys.s(); ++k) {
            const MatLaurent local = rmf_expand_at(*out.W, sys.pole(k), 2);
            CHECK(local.min_order() >= exponent_bounds(sys.effective_residue(k)).m);
            // residue lies in the (-1)-eigenspace of rho P_k
            CHECK(((RatMatrix::identity(4) + sys.effective_residue(k)) * local.coeff(-1)).is_zero());
        }
        CHECK(rmf_expand_at_infinity(*out.W, 0).min_order() == -*out.W->poly_degree());
    }
}

TEST_CASE("adjoint", "[ratfunc]")
{
    SECTION("single transposition")
    {
        const KZSystem sys({Rational(0)}, {swap2}, 1);
        const RatMatFunc w = *solve_rational(sys).W;
        const RatMatFunc y = adjoint_solution(sys, w);
        CHECK(*y.poly_degree() == 1);
        CHECK(y.pole_order(0) == 1);
        const RatMatFunc wy = rmf_mul(w, y);
        CHECK(wy.pole_parts().empty());
        CHECK(wy.is_constant());
        CHECK(verify_left(sys, y).passed());
    }
    SECTION("symmetric residues: Y is the inverse transpose relation")
    {
        const KZSystem sys = natural_kz_system(3, {0, 1}, 1);
        const RatMatFunc w = *solve_rational(sys).W;
        const RatMatFunc y = adjoint_solution(sys, w);
        const RatMatrix c = rmf_mul(y, w).poly_coeff(0);
        for (const Rational& z : {make_rational(7, 3), make_rational(-5, 2)}) {
            CHECK(rmf_eval(w, z).inverse().transpose() == rmf_eval(y, z).transpose() * c.inverse().transpose());
            CHECK(rmf_eval(y, z) * rmf_eval(w, z) == c);
        }
        CHECK(verify(sys.with_rho(-1), y.transpose()).passed());
    }
}
