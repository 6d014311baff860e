#include <catch_amalgamated.hpp>

#include <kzrat/kzsystem.hpp>
#include <kzrat/symrep.hpp>

#include "oracles.hpp"

using namespace kzrat;

TEST_CASE("transposition matrices", "[symrep]")
{
    CHECK(transposition_matrix({3, 1, 2}) == RatMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(transposition_matrix({3, 1, 3}) == RatMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(transposition_matrix({2, 1, 2}) == RatMatrix{{0, 1}, {1, 0}});
    CHECK(transposition_matrix({4, 3, 1}) == transposition_matrix({4, 1, 3}));
    CHECK_THROWS_AS(transposition_matrix({3, 2, 2}), kz_error);
    CHECK_THROWS_AS(transposition_matrix({3, 0, 2}), kz_error);
    CHECK_THROWS_AS(transposition_matrix({3, 1, 4}), kz_error);

    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                const RatMatrix p = transposition_matrix({n, i, j});
                CHECK(p.is_symmetric());
                CHECK(p * p == RatMatrix::identity(n));
            }
}

TEST_CASE("natural KZ systems", "[symrep]")
{
    const KZSystem s2 = natural_kz_system(2, {0}, -1);
    CHECK(s2.s() == 1);
    CHECK(s2.rho() == -1);
    CHECK(s2.residue(1) == RatMatrix{{0, 1}, {1, 0}});

    const KZSystem s3 = natural_kz_system(3, {0, 1}, 1);
    CHECK(s3.residue(1) == transposition_matrix({3, 1, 2}));
    CHECK(s3.residue(2) == transposition_matrix({3, 1, 3}));
    CHECK(is_natural_representation(s3));

    CHECK_THROWS_AS(natural_kz_system(3, {0}, 1), kz_error);
    CHECK_THROWS_AS(natural_kz_system(3, {1, 1}, 1), kz_error);
    CHECK_THROWS_AS(natural_kz_system(1, {}, 1), kz_error);

    const KZSystem swapped({Rational(0), Rational(1)}, {s3.residue(2), s3.residue(1)}, 1);
    CHECK_FALSE(is_natural_representation(swapped));
}

TEST_CASE("T1 decomposition", "[symrep]")
{
    SECTION("n = 2")
    {
        const T1Decomposition d = t1_decomposition(2);
        CHECK(d.T1 == RatMatrix{{0, 1}, {1, 0}});
        CHECK(d.identity_shift == 0);
        CHECK(d.spectrum.multiplicity(1) == 1);
        CHECK(d.spectrum.multiplicity(-1) == 1);
    }
    SECTION("n = 3")
    {
        const T1Decomposition d = t1_decomposition(3);
        CHECK(d.T1 == RatMatrix{{-1, 1, 1}, {1, 0, 0}, {1, 0, 0}});
        CHECK(d.spectrum.multiplicity(2) == 1);
        CHECK(d.spectrum.multiplicity(1) == 1);
        CHECK(d.spectrum.multiplicity(-1) == 1);
        CHECK(d.ones_eigenvector);
    }
    SECTION("n = 5")
    {
        const T1Decomposition d = t1_decomposition(5);
        CHECK(d.spectrum.all_integer);
        CHECK(d.spectrum.multiplicity(4) == 1);
        CHECK(d.spectrum.multiplicity(3) == 3);
        CHECK(d.spectrum.multiplicity(-1) == 1);
    }
    SECTION("profile against the rank oracle, n = 2..8")
    {
        for (std::size_t n = 2; n <= 8; ++n) {
            const long nn = static_cast<long>(n);
            RatMatrix t(n, n);
            for (std::size_t k = 1; k < n; ++k) t += transposition_matrix({n, 1, k + 1});
            const T1Decomposition d = t1_decomposition(n);
            CHECK(t == RatMatrix::scalar(n, nn - 2) + d.T1);
            CHECK(d.spectrum.all_integer);
            CHECK(*d.spectrum.min() == -1);
            CHECK(*d.spectrum.max() == nn - 1);
            CHECK(oracle::eigen_multiplicity(t, nn - 1) == 1);
            CHECK(oracle::eigen_multiplicity(t, -1) == 1);
            CHECK(oracle::eigen_multiplicity(t, nn - 2) == n - 2);
            CHECK(d.spectrum.multiplicity(nn - 1) == 1);
            CHECK(d.spectrum.multiplicity(-1) == 1);
            CHECK(d.spectrum.multiplicity(nn - 2) == n - 2);
        }
    }
    CHECK_THROWS_AS(t1_decomposition(1), kz_error);
}

TEST_CASE("group law", "[symrep]")
{
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                for (std::size_t k = 1; k <= n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    const RatMatrix pij = transposition_matrix({n, i, j});
                    CHECK(pij * transposition_matrix({n, j, k}) * pij == transposition_matrix({n, i, k}));
                }
}
