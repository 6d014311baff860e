#include <catch_amalgamated.hpp>

#include <kzrat/kzsystem.hpp>
#include <kzrat/symrep.hpp>

#include "oracles.hpp"

using namespace kzrat;

namespace {

const RatMatrix swap2{{0, 1}, {1, 0}};

} // namespace

TEST_CASE("system validation", "[kzsystem]")
{
    CHECK_THROWS_AS(KZSystem({}, {}, 1), kz_error);
    CHECK_THROWS_AS(KZSystem({Rational(0)}, {swap2}, 0), kz_error);
    CHECK_THROWS_AS(KZSystem({Rational(0), Rational(1)}, {swap2}, 1), kz_error);
    CHECK_THROWS_AS(KZSystem({Rational(0), Rational(1)}, {swap2, RatMatrix::identity(3)}, 1), kz_error);
    try {
        KZSystem({Rational(2), Rational(2)}, {swap2, swap2}, 1);
        FAIL("duplicate poles accepted");
    } catch (const kz_error& e) {
        CHECK(e.code() == errc::duplicate_poles);
    }
    const KZSystem sys({Rational(0), Rational(1)}, {swap2, swap2}, -1);
    CHECK(sys.effective_residue(1) == -swap2);
    CHECK_THROWS_AS(sys.coefficient_at(Rational(1)), kz_error);
    CHECK(sys.coefficient_at(Rational(2)) == make_rational(3, 2) * swap2);
}

TEST_CASE("projectors", "[kzsystem]")
{
    SECTION("transposition")
    {
        const Projectors pr = projectors(swap2);
        CHECK(pr.plus == RatMatrix{{1, -1}, {-1, 1}});
        CHECK(pr.minus == RatMatrix{{1, 1}, {1, 1}});
        CHECK(pr.minus * pr.plus == RatMatrix::zero(2, 2));
        CHECK(pr.plus * pr.plus + pr.minus * pr.minus == RatMatrix::scalar(2, 4));
    }
    SECTION("identity")
    {
        const Projectors pr = projectors(RatMatrix::identity(2));
        CHECK(pr.plus.is_zero());
        CHECK(pr.minus == RatMatrix::scalar(2, 2));
    }
    SECTION("non-involution")
    {
        const RatMatrix p{{1, 1}, {0, 1}};
        const Projectors pr = projectors(p);
        CHECK(pr.plus + pr.minus == RatMatrix::scalar(2, 2));
        CHECK_FALSE((pr.minus * pr.plus).is_zero());
        CHECK_THROWS_AS(projectors(RatMatrix(2, 3)), kz_error);
    }
}

TEST_CASE("solvability conditions", "[kzsystem]")
{
    SECTION("S_3 pair identity")
    {
        const KZSystem sys = natural_kz_system(3, {0, 1}, 1);
        const RatMatrix& p1 = sys.residue(1);
        const RatMatrix& p2 = sys.residue(2);
        const RatMatrix p2plus = RatMatrix::identity(3) - p2;
        CHECK((p1 * p2 * p1 + p1) * p2plus == p2plus);
        const ConditionReport rep = check_conditions(sys);
        CHECK(rep.all_pass);
        CHECK(rep.triple.status == CheckStatus::vacuous);
        CHECK(rep.pair.status == CheckStatus::pass);
        CHECK(rep.pair.instances_checked == 2);
    }
    SECTION("S_4 triple identity")
    {
        const KZSystem sys = natural_kz_system(4, {0, 1, 2}, 1);
        const RatMatrix& p1 = sys.residue(1);
        const RatMatrix& p2 = sys.residue(2);
        const RatMatrix& p3 = sys.residue(3);
        CHECK(((p1 * p2 * p3 + p3 * p2 * p1) * (RatMatrix::identity(4) - p2)).is_zero());
        const ConditionReport rep = check_conditions(sys);
        CHECK(rep.all_pass);
        CHECK(rep.triple.instances_checked == 6);
    }
    SECTION("single pole: pair and triple vacuous")
    {
        const ConditionReport rep = check_conditions(KZSystem({Rational(0)}, {swap2}, 1));
        CHECK(rep.all_pass);
        CHECK(rep.pair.status == CheckStatus::vacuous);
        CHECK(rep.triple.status == CheckStatus::vacuous);
    }
    SECTION("non-involutive, non-symmetric residue")
    {
        const ConditionReport rep = check_conditions(KZSystem({Rational(0)}, {RatMatrix{{1, 1}, {0, 1}}}, 1));
        CHECK_FALSE(rep.all_pass);
        CHECK(rep.involution.status == CheckStatus::fail);
        CHECK(rep.involution.witness == std::vector<std::size_t>{1});
        CHECK(rep.symmetry.status == CheckStatus::fail);
        CHECK(rep.symmetry.witness == std::vector<std::size_t>{1});
    }
    SECTION("natural representations up to n = 6")
    {
        for (std::size_t n = 2; n <= 6; ++n) {
            std::vector<Rational> poles;
            for (std::size_t k = 0; k + 1 < n; ++k) poles.push_back(Rational(static_cast<long>(k * k) - 3));
            CHECK(check_conditions(natural_kz_system(n, poles, 1)).all_pass);
        }
    }
}

TEST_CASE("beta", "[kzsystem]")
{
    CHECK(beta(KZSystem({Rational(5)}, {swap2}, 1), 1) == 0);
    CHECK(beta(natural_kz_system(3, {0, 1}, 1), 1) == 1);
    CHECK(beta(natural_kz_system(4, {0, 1, -1}, 1), 1) == 2);
    CHECK(beta(natural_kz_system(4, {0, 1, -1}, 1), 2) == make_rational(5, 4));
    CHECK_THROWS_AS(beta(natural_kz_system(3, {0, 1}, 1), 3), kz_error);
}

TEST_CASE("degree bounds", "[kzsystem]")
{
    SECTION("S_3, rho = 1")
    {
        const DegreeBounds db = degree_bounds(natural_kz_system(3, {0, 1}, 1));
        CHECK(db.all_integer);
        CHECK(*db.m_T == -1);
        CHECK(*db.M_T == 2);
        CHECK(*db.deg_Q1 == 2);
        CHECK(*db.deg_Q2 == 1);
        CHECK(db.spectrum.characteristic_polynomial == oracle::charpoly(db.T));
    }
    SECTION("single transposition")
    {
        const DegreeBounds db = degree_bounds(KZSystem({Rational(0)}, {swap2}, 1));
        CHECK(*db.m_T == -1);
        CHECK(*db.M_T == 1);
        CHECK(*db.deg_Q1 == 1);
        CHECK(*db.deg_Q2 == 1);
    }
    SECTION("rho = -1 flips the spectrum")
    {
        const DegreeBounds db = degree_bounds(natural_kz_system(4, {0, 1, 2}, -1));
        CHECK(*db.m_T == -3);
        CHECK(*db.M_T == 1);
        CHECK(*db.deg_Q1 == 1);
        CHECK(*db.deg_Q2 == 3);
    }
    SECTION("irrational spectrum")
    {
        const DegreeBounds db = degree_bounds(KZSystem({Rational(0)}, {RatMatrix{{0, 2}, {1, 0}}}, 1));
        CHECK_FALSE(db.all_integer);
        CHECK_FALSE(db.deg_Q1);
        CHECK_FALSE(db.deg_Q2);
    }
    SECTION("positive spectrum leaves Q2 = 0")
    {
        const DegreeBounds db = degree_bounds(KZSystem({Rational(0)}, {RatMatrix::identity(2)}, 1));
        CHECK(*db.m_T == 1);
        CHECK_FALSE(db.deg_Q2);
        CHECK(*db.deg_Q1 == 1);
    }
}
