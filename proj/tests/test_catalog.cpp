#include "rota/catalog.hpp"

#include "rota/combinatorics.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <array>
#include <stdexcept>
#include <tuple>

using namespace rota;

TEST_CASE("gauss sum values")
{
    // a = b = c = 1 collapses every Pochhammer ratio to 1
    CHECK(gauss_sum(1, 1, 1, 0) == Rational(1));
    CHECK(gauss_sum(1, 1, 1, 1) == Rational(2));
    CHECK(gauss_sum(1, 1, 1, 2) == Rational(5));
    CHECK(gauss_sum(1, 1, 1, 3) == Rational(16));
    CHECK(gauss_sum(1, 1, 1, 4) == Rational(65));

    CHECK_THROWS_AS((void)gauss_sum(1, 1, -2, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)gauss_sum(1, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("gauss sum is the transform of the hypergeometric coefficients")
{
    const Rational a(1, 2), b(1, 3), c(5, 4);
    const long nmax = 12;
    TaylorSeries coeffs = TaylorSeries::zero(nmax);
    for (long k = 0; k <= nmax; ++k)
        coeffs[k] = pochhammer(a, k) * pochhammer(b, k) / pochhammer(c, k) * rfact(k);
    const LatticeSequence u = forward_transform(coeffs, nmax, 1);
    for (long n = 0; n <= nmax; ++n)
        CHECK(gauss_sum(a, b, c, n) == u[n]);
}

TEST_CASE("jacobi polynomial coefficients")
{
    CHECK(jacobi_polynomial(0, 0, 0) == std::vector<Rational>{1});
    CHECK(jacobi_polynomial(1, 0, 0) == std::vector<Rational>{0, 1});
    CHECK(jacobi_polynomial(2, 0, 0)
          == std::vector<Rational>{Rational(-1, 2), 0, Rational(3, 2)});
    // P_1^(a,b) = (a - b)/2 + (a + b + 2)/2 x
    CHECK(jacobi_polynomial(1, Rational(1, 2), Rational(1, 2))
          == std::vector<Rational>{0, Rational(3, 2)});
    CHECK(jacobi_polynomial(1, 1, Rational(5, 3))
          == std::vector<Rational>{Rational(-1, 3), Rational(7, 3)});
    CHECK_THROWS_AS((void)jacobi_polynomial(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("discrete jacobi values")
{
    // degree 0: constants stay put
    for (long n = 0; n <= 6; ++n)
        CHECK(discrete_jacobi(0, 0, 0, n) == Rational(1));
    // degree 1 with alpha = beta = 0 is u_n = n
    for (long n = 0; n <= 6; ++n)
        CHECK(discrete_jacobi(1, 0, 0, n) == Rational(n));
    // degree 2: -1/2 + 3/2 n(n-1)
    CHECK(discrete_jacobi(2, 0, 0, 2) == Rational(5, 2));
    CHECK(discrete_jacobi(2, 0, 0, 0) == Rational(-1, 2));
}

TEST_CASE("the frozen hypergeometric stencil instance")
{
    // a = b = c = 1 at n = 2: 3 u_3 - 14 u_2 + 12 u_1 - 2 u_0
    LatticeSequence u;
    for (long n = 0; n <= 4; ++n)
        u.values.push_back(gauss_sum(1, 1, 1, n));
    CHECK(Rational(3 * u[3]) == Rational(48));
    CHECK(Rational(14 * u[2]) == Rational(70));
    CHECK(Rational(12 * u[1]) == Rational(24));
    CHECK(Rational(2 * u[0]) == Rational(2));
    CHECK(hypergeometric_stencil_residual(1, 1, 1, u, 2) == 0);
}

TEST_CASE("hand stencils vanish on their solutions")
{
    SUBCASE("gaussian")
    {
        const CatalogEntry entry = build_example("gaussian", {});
        const LatticeSequence u = forward_transform(entry.solution, 30, 1);
        for (long n = 1; n + 1 <= 30; ++n)
            CHECK(gaussian_stencil_residual(u, n) == 0);
        CHECK_THROWS_AS((void)gaussian_stencil_residual(u, 0), std::invalid_argument);
    }
    SUBCASE("hypergeometric parameter sweep")
    {
        const std::vector<std::array<Rational, 3>> cases{
            {Rational(1), Rational(1), Rational(1)},
            {Rational(1, 2), Rational(1, 3), Rational(5, 4)},
            {Rational(2), Rational(3), Rational(7, 2)},
        };
        for (const auto& [a, b, c] : cases) {
            LatticeSequence u;
            for (long n = 0; n <= 25; ++n)
                u.values.push_back(gauss_sum(a, b, c, n));
            for (long n = 0; n + 1 <= 25; ++n)
                CHECK(hypergeometric_stencil_residual(a, b, c, u, n) == 0);
        }
    }
    SUBCASE("jacobi parameter sweep")
    {
        const std::vector<std::tuple<long, Rational, Rational>> cases{
            {1, Rational(0), Rational(0)},
            {2, Rational(1, 2), Rational(1, 2)},
            {3, Rational(1), Rational(5, 3)},
            {5, Rational(0), Rational(0)},
        };
        for (const auto& [m, alpha, beta] : cases) {
            LatticeSequence u;
            for (long n = 0; n <= 22; ++n)
                u.values.push_back(discrete_jacobi(m, alpha, beta, n));
            for (long n = 0; n + 2 <= 22; ++n)
                CHECK(jacobi_stencil_residual(m, alpha, beta, u, n) == 0);
        }
    }
}

TEST_CASE("catalog construction and certification")
{
    for (const std::string& name : catalog_names()) {
        const CatalogEntry entry = build_example(name, {});
        CHECK(entry.name == name);
        CHECK(entry.certified_through >= 20);
        // re-run the generic residual independently of certify()
        const LatticeSequence u =
            forward_transform(entry.solution, entry.certified_through + entry.stencil_width(), 1);
        for (long n = 0; n <= entry.certified_through; ++n)
            CHECK(entry_residual(entry, u, n) == 0);
    }
    CHECK(catalog_names().size() == 5);
}

TEST_CASE("painleve entry reproduces the known lattice prefix")
{
    const CatalogEntry entry = build_example("painleve1", {});
    CHECK(entry.solution[3] == Rational(1, 6));
    CHECK(entry.solution[8] == Rational(1, 336));
    const LatticeSequence u = forward_transform(entry.solution, 8, 1);
    CHECK(u[0] == 0);
    CHECK(u[1] == 0);
    CHECK(u[2] == 0);
    CHECK(u[3] == Rational(1));
    CHECK(u[4] == Rational(4));
}

TEST_CASE("riccati entry matches the recursive solver")
{
    for (long k : {0L, 1L, 2L})
        for (long c1 : {1L, 2L}) {
            const CatalogEntry entry =
                build_example("riccati_xk", {{"k", Rational(k)}, {"c1", Rational(c1)}});
            const auto& ode = std::get<NonlinearODESpec>(entry.problem);
            const TaylorSeries direct =
                solve_nonlinear_series(ode, {Rational(-(k + 1), c1)}, 12);
            for (long j = 0; j <= 12; ++j)
                CHECK(entry.solution[j] == direct[j]);
        }
}

TEST_CASE("catalog parameter validation")
{
    CHECK_THROWS_AS((void)build_example("lorenz", {}), std::invalid_argument);
    CHECK_THROWS_AS((void)build_example("gaussian", {{"a", Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_example("hypergeometric", {{"c", Rational(-2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_example("jacobi", {{"m", Rational(1, 2)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_example("jacobi", {{"m", Rational(-1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_example("riccati_xk", {{"c1", Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_example("riccati_xk", {{"k", Rational(99)}}),
                    std::invalid_argument);
}

TEST_CASE("continuum limit study")
{
    const CatalogEntry entry = build_example("gaussian", {});
    const std::vector<Rational> hs{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
    const LimitTable table = continuum_limit_study(entry, hs, 1);

    REQUIRE(table.rows.size() == 4);
    CHECK(table.rows[0].n == 1);
    CHECK(table.rows[3].n == 8);
    CHECK(table.x_star == Rational(1));
    // the lattice value at h = 1, n = 1 is u_1 = b_0 = 1
    CHECK(table.rows[0].lattice_value == Rational(1));
    // errors shrink monotonically toward the series value
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
        CHECK(table.rows[i].error > table.rows[i + 1].error);
    REQUIRE(table.ratios.size() == 3);
    for (double r : table.ratios)
        CHECK(r > 1.0);

    CHECK_THROWS_AS((void)continuum_limit_study(entry, {Rational(2, 3)}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)continuum_limit_study(entry, {Rational(1, 100)}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)continuum_limit_study(entry, {}, 1), std::invalid_argument);
}
