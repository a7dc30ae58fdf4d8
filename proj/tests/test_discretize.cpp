#include "rota/discretize.hpp"

#include "rota/combinatorics.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace rota;
using rota::testing::Xorshift;

namespace {

TaylorSeries poly(std::vector<Rational> coeffs, long k_top)
{
    coeffs.resize(static_cast<std::size_t>(k_top) + 1, Rational(0));
    return TaylorSeries(std::move(coeffs));
}

TaylorSeries exp_coeffs(long k_top, long rate = 1)
{
    TaylorSeries b = TaylorSeries::zero(k_top);
    Rational p = 1;
    for (long k = 0; k <= k_top; ++k) {
        b[k] = p * rfact(k);
        p *= rate;
    }
    return b;
}

LatticeSequence geometric_lattice(long base, long nmax)
{
    LatticeSequence u;
    Rational v = 1;
    for (long n = 0; n <= nmax; ++n) {
        u.values.push_back(v);
        v *= base;
    }
    return u;
}

LinearODESpec gaussian_ode(long k_top)
{
    LinearODESpec ode;
    ode.order_n = 1;
    ode.a = {poly({0, 1}, k_top), poly({1}, k_top)}; // y' + x y = 0
    ode.c0 = TaylorSeries::zero(k_top);
    return ode;
}

Xorshift& rng()
{
    static Xorshift instance;
    return instance;
}

LatticeSequence random_lattice(long nmax, const Rational& h = 1)
{
    LatticeSequence u;
    u.h = h;
    for (long n = 0; n <= nmax; ++n)
        u.values.push_back(rng().next_rational());
    return u;
}

LinearODESpec random_linear_ode(long k_top = 3)
{
    LinearODESpec ode;
    ode.order_n = rng().next_in(1, 3);
    for (long i = 0; i <= ode.order_n; ++i)
        ode.a.push_back(rng().next_series(k_top));
    ode.a.back()[0] = rng().next_nonzero_rational();
    ode.c0 = rng().next_series(k_top);
    return ode;
}

} // namespace

TEST_CASE("monomial correspondence basics")
{
    const LatticeSequence u = geometric_lattice(2, 8);
    CHECK(monomial_correspondence(u, 0, 0, 5) == u[5]);
    // x e^x -> n 2^{n-1}
    CHECK(monomial_correspondence(u, 1, 1, 4) == Rational(32));
    CHECK(monomial_correspondence(u, 2, 0, 1) == Rational(0)); // n < r
}

TEST_CASE("gaussian residual matches the hand stencil and vanishes")
{
    const LinearODESpec ode = gaussian_ode(10);
    TaylorSeries b = TaylorSeries::zero(10);
    Rational c = 1;
    for (long j = 0; 2 * j <= 10; ++j) {
        b[2 * j] = c * rfact(j);
        c *= Rational(-1, 2);
    }
    const LatticeSequence u = forward_transform(b, 10, 1);
    CHECK(u.values[0] == Rational(1));
    CHECK(u.values[3] == Rational(-2));
    for (long n = 0; n + 1 <= 10; ++n) {
        CHECK(linear_residual(ode, u, n) == 0);
        // stencil u_{n+1} - u_n + n u_{n-1}
        Rational stencil = u[n + 1] - u[n];
        if (n >= 1)
            stencil += Rational(n) * u[n - 1];
        CHECK(linear_residual(ode, u, n) == stencil);
    }
}

TEST_CASE("exponential residual for y' - y = 0")
{
    LinearODESpec ode;
    ode.order_n = 1;
    ode.a = {poly({-1}, 8), poly({1}, 8)};
    ode.c0 = TaylorSeries::zero(8);
    const LatticeSequence u = geometric_lattice(2, 8);
    for (long n = 0; n + 1 <= 8; ++n)
        CHECK(linear_residual(ode, u, n) == 0);
}

TEST_CASE("constant sequences solve y' = 0")
{
    LinearODESpec ode;
    ode.order_n = 1;
    ode.a = {poly({0}, 6), poly({1}, 6)};
    ode.c0 = TaylorSeries::zero(6);
    LatticeSequence u;
    u.values.assign(7, Rational(1));
    for (long n = 0; n + 1 <= 6; ++n)
        CHECK(linear_residual(ode, u, n) == 0);
}

TEST_CASE("the two linear residual forms agree on arbitrary data")
{
    for (int trial = 0; trial < 200; ++trial) {
        const LinearODESpec ode = random_linear_ode();
        const long nmax = 8;
        const LatticeSequence u = random_lattice(nmax, trial % 3 == 0 ? Rational(1, 2) : Rational(1));
        const long n = rng().next_in(0, nmax - ode.order_n);
        CHECK(linear_residual(ode, u, n) == linear_residual_expanded(ode, u, n));
    }
}

TEST_CASE("expanded form vanishes on the zero lattice for homogeneous equations")
{
    LinearODESpec ode = random_linear_ode();
    ode.c0 = TaylorSeries::zero(3);
    LatticeSequence u;
    u.values.assign(9, Rational(0));
    for (long n = 0; n + ode.order_n <= 8; ++n)
        CHECK(linear_residual_expanded(ode, u, n) == 0);
}

TEST_CASE("solution certificate for randomized linear ODEs")
{
    for (int trial = 0; trial < 5; ++trial) {
        const LinearODESpec ode = random_linear_ode();
        std::vector<Rational> init;
        for (long i = 0; i < ode.order_n; ++i)
            init.push_back(rng().next_rational());
        const long nmax = 16;
        const TaylorSeries b = solve_linear_series(ode, init, nmax + ode.order_n);
        const LatticeSequence u = forward_transform(b, nmax + ode.order_n, 1);
        for (long n = 0; n <= nmax; ++n) {
            CHECK(linear_residual(ode, u, n) == 0);
            CHECK(linear_residual_expanded(ode, u, n) == 0);
        }
    }
}

TEST_CASE("certificates survive h != 1")
{
    const LinearODESpec ode = gaussian_ode(14);
    TaylorSeries b = TaylorSeries::zero(14);
    Rational c = 1;
    for (long j = 0; 2 * j <= 14; ++j) {
        b[2 * j] = c * rfact(j);
        c *= Rational(-1, 2);
    }
    for (const Rational& h : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) {
        const LatticeSequence u = forward_transform(b, 14, h);
        for (long n = 0; n + 1 <= 14; ++n)
            CHECK(linear_residual(ode, u, n) == 0);
    }
}

TEST_CASE("power image of the exponential lattice")
{
    const LatticeSequence u = geometric_lattice(2, 12);
    SUBCASE("r = 1 collapses to u_n")
    {
        for (long n = 0; n <= 12; ++n)
            CHECK(power_image(u, 1, n) == u[n]);
    }
    SUBCASE("square maps e^x to e^2x, i.e. 2^n to 3^n")
    {
        CHECK(power_image(u, 2, 1) == Rational(3));
        CHECK(power_image(u, 2, 3) == Rational(27));
        Rational expect = 1;
        for (long n = 0; n <= 12; ++n) {
            CHECK(power_image(u, 2, n) == expect);
            expect *= 3;
        }
    }
    SUBCASE("cube maps 2^n to 4^n")
    {
        Rational expect = 1;
        for (long n = 0; n <= 10; ++n) {
            CHECK(power_image(u, 3, n) == expect);
            expect *= 4;
        }
    }
}

TEST_CASE("power image agrees with the series oracle")
{
    // power_image(u, r, n) = forward_transform(series_pow(inverse_transform(u), r))_n
    for (int trial = 0; trial < 100; ++trial) {
        const long nmax = 10;
        const LatticeSequence u = random_lattice(nmax);
        const long r = rng().next_in(1, 3);
        const TaylorSeries b = inverse_transform(u);
        const LatticeSequence ur = forward_transform(series_pow(b, r), nmax, 1);
        const long n = rng().next_in(0, nmax);
        CHECK(power_image(u, r, n) == ur[n]);
    }
}

TEST_CASE("power image multiplicativity across exponents")
{
    const long nmax = 9;
    const LatticeSequence u = random_lattice(nmax);
    const TaylorSeries b = inverse_transform(u);
    for (long r1 = 1; r1 <= 2; ++r1)
        for (long r2 = 1; r2 <= 2; ++r2) {
            const LatticeSequence prod =
                forward_transform(series_mul(series_pow(b, r1), series_pow(b, r2)), nmax, 1);
            for (long n = 0; n <= nmax; ++n)
                CHECK(power_image(u, r1 + r2, n) == prod[n]);
        }
}

TEST_CASE("shifted power image")
{
    const LatticeSequence u = geometric_lattice(2, 8);
    CHECK(shifted_power_image(u, 2, 5, 3) == 0); // n < m
    for (long n = 0; n <= 8; ++n)
        CHECK(shifted_power_image(u, 2, 0, n) == power_image(u, 2, n));
    // x e^{2x} has lattice image n 3^{n-1}
    CHECK(shifted_power_image(u, 2, 1, 2) == Rational(6));
    CHECK(shifted_power_image(u, 2, 1, 4) == Rational(108));
}

TEST_CASE("shifted power image against the series oracle")
{
    for (int trial = 0; trial < 50; ++trial) {
        const long nmax = 8;
        const LatticeSequence u = random_lattice(nmax);
        const long r = rng().next_in(1, 3);
        const long m = rng().next_in(0, 3);
        const TaylorSeries b = inverse_transform(u);
        // multiply the r-th power by x^m
        const TaylorSeries pw = series_pow(b, r);
        TaylorSeries shifted = TaylorSeries::zero(nmax);
        for (long k = 0; k + m <= nmax; ++k)
            shifted[k + m] = pw[k];
        const LatticeSequence expect = forward_transform(shifted, nmax, 1);
        const long n = rng().next_in(0, nmax);
        CHECK(shifted_power_image(u, r, m, n) == expect[n]);
    }
}

TEST_CASE("coeff power image special cases")
{
    const long nmax = 8;
    const LatticeSequence u = random_lattice(nmax);
    for (long n = 0; n <= nmax; ++n) {
        CHECK(coeff_power_image(u, poly({1}, 4), 2, n) == power_image(u, 2, n));
        CHECK(coeff_power_image(u, poly({6}, 4), 2, n) == 6 * power_image(u, 2, n));
        // a = x, r = 1: image is n h u_{n-1}
        const Rational expect = (n >= 1) ? Rational(Rational(n) * u.h * u[n - 1]) : Rational(0);
        CHECK(coeff_power_image(u, poly({0, 1}, 4), 1, n) == expect);
        CHECK(coeff_power_image(u, poly({0, 1}, 4), 1, n)
              == monomial_correspondence(u, 1, 0, n));
    }
}

TEST_CASE("nonlinear residual certificates")
{
    SUBCASE("painleve I at h = 1")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 2;
        ode.degree_n = 2;
        ode.a = {poly({0, 1}, 12), TaylorSeries::zero(12), poly({6}, 12)};
        const TaylorSeries b = solve_nonlinear_series(ode, {Rational(0), Rational(0)}, 12);
        const LatticeSequence u = forward_transform(b, 12, 1);
        CHECK(u[3] == Rational(1));
        CHECK(u[4] == Rational(4));
        for (long n = 0; n + 2 <= 12; ++n)
            CHECK(nonlinear_residual(ode, u, n) == 0);
        // the discrete Painleve I stencil, spelled out
        const long n = 1;
        Rational direct = u[n + 2] - 2 * u[n + 1] + u[n] - Rational(n);
        for (long j1 = 0; j1 <= n; ++j1)
            for (long j2 = 0; j2 <= n - j1; ++j2) {
                const Rational term = 6 * falling_factorial(n, j1 + j2) * rfact(j1) * rfact(j2)
                                      * u[j1] * u[j2];
                direct += ((n - j1 - j2) % 2 == 0) ? term : -term;
            }
        CHECK(direct == 0);
        CHECK(nonlinear_residual(ode, u, n) == direct);
    }

    SUBCASE("y' = y^2 on the geometric solution")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 1;
        ode.degree_n = 2;
        ode.a = {TaylorSeries::zero(10), TaylorSeries::zero(10), poly({1}, 10)};
        TaylorSeries b = TaylorSeries::zero(10);
        for (long k = 0; k <= 10; ++k)
            b[k] = 1;
        const LatticeSequence u = forward_transform(b, 10, 1);
        for (long n = 0; n + 1 <= 10; ++n)
            CHECK(nonlinear_residual(ode, u, n) == 0);
    }

    SUBCASE("y' = x y^2 family")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 1;
        ode.degree_n = 2;
        ode.a = {TaylorSeries::zero(12), TaylorSeries::zero(12), poly({0, 1}, 12)};
        TaylorSeries b = TaylorSeries::zero(12);
        for (long j = 0; 2 * j <= 12; ++j)
            b[2 * j] = (j % 2 == 0) ? Rational(-2) : Rational(2);
        const LatticeSequence u = forward_transform(b, 12, 1);
        for (long n = 0; n + 1 <= 12; ++n)
            CHECK(nonlinear_residual(ode, u, n) == 0);
    }

    SUBCASE("nonlinear certificate survives h != 1")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 2;
        ode.degree_n = 2;
        ode.a = {poly({0, 1}, 10), TaylorSeries::zero(10), poly({6}, 10)};
        const TaylorSeries b = solve_nonlinear_series(ode, {Rational(1, 3), Rational(-1, 2)}, 10);
        for (const Rational& h : {Rational(1, 2), Rational(1, 4)}) {
            const LatticeSequence u = forward_transform(b, 10, h);
            for (long n = 0; n + 2 <= 10; ++n)
                CHECK(nonlinear_residual(ode, u, n) == 0);
        }
    }
}

TEST_CASE("fourier residual")
{
    SUBCASE("y' = y^2 with unit coefficients")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 1;
        ode.degree_n = 2;
        ode.a = {TaylorSeries::zero(0), TaylorSeries::zero(0), poly({1}, 0)};
        FourierCoefficients zeta;
        zeta.zeta.assign(27, Rational(1));
        for (long n = 0; n + 1 <= 26; ++n)
            CHECK(fourier_residual(ode, zeta, n) == 0);
    }
    SUBCASE("y' = y with reciprocal factorials")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 1;
        ode.degree_n = 1;
        ode.a = {TaylorSeries::zero(0), poly({1}, 0)};
        FourierCoefficients zeta;
        for (long k = 0; k <= 26; ++k)
            zeta.zeta.push_back(rfact(k));
        for (long n = 0; n + 1 <= 26; ++n)
            CHECK(fourier_residual(ode, zeta, n) == 0);
    }
    SUBCASE("all-zero coefficients with no inhomogeneity")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 1;
        ode.degree_n = 2;
        ode.a = {TaylorSeries::zero(0), TaylorSeries::zero(0), poly({1}, 0)};
        FourierCoefficients zeta;
        zeta.zeta.assign(10, Rational(0));
        for (long n = 0; n + 1 <= 9; ++n)
            CHECK(fourier_residual(ode, zeta, n) == 0);
    }
    SUBCASE("nonconstant coefficients are rejected")
    {
        NonlinearODESpec ode;
        ode.deriv_m = 1;
        ode.degree_n = 1;
        ode.a = {TaylorSeries::zero(1), poly({0, 1}, 1)};
        FourierCoefficients zeta;
        zeta.zeta.assign(4, Rational(1));
        CHECK_THROWS_AS((void)fourier_residual(ode, zeta, 0), std::invalid_argument);
    }
}

TEST_CASE("fourier coefficients telescope to the series coefficients")
{
    SUBCASE("exponential") {
        const TaylorSeries b = exp_coeffs(12);
        const LatticeSequence u = forward_transform(b, 12, 1);
        const FourierCoefficients zeta = fourier_coefficients(b, u);
        for (long n = 0; n <= 12; ++n)
            CHECK(zeta[n] == rfact(n));
    }
    SUBCASE("constant") {
        TaylorSeries b = TaylorSeries::zero(6);
        b[0] = Rational(7, 3);
        const LatticeSequence u = forward_transform(b, 6, 1);
        const FourierCoefficients zeta = fourier_coefficients(b, u);
        CHECK(zeta[0] == Rational(7, 3));
        for (long n = 1; n <= 6; ++n)
            CHECK(zeta[n] == 0);
    }
    SUBCASE("random series") {
        for (int trial = 0; trial < 100; ++trial) {
            const TaylorSeries b = rng().next_series(12);
            const LatticeSequence u = forward_transform(b, 12, 1);
            const FourierCoefficients zeta = fourier_coefficients(b, u);
            for (long n = 0; n <= 12; ++n)
                CHECK(zeta[n] == b[n]);
        }
    }
    SUBCASE("matches the inverse transform elementwise") {
        const TaylorSeries b = rng().next_series(10);
        const LatticeSequence u = forward_transform(b, 10, 1);
        const FourierCoefficients zeta = fourier_coefficients(b, u);
        const TaylorSeries binv = inverse_transform(u);
        for (long n = 0; n <= 10; ++n)
            CHECK(zeta[n] == binv[n]);
    }
}

TEST_CASE("window errors are reported")
{
    const LatticeSequence u = geometric_lattice(2, 5);
    const LinearODESpec ode = gaussian_ode(6);
    CHECK_THROWS_AS((void)linear_residual(ode, u, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)monomial_correspondence(u, 0, 2, 4), std::invalid_argument);
    NonlinearODESpec nl;
    nl.deriv_m = 2;
    nl.degree_n = 1;
    nl.a = {TaylorSeries::zero(2), TaylorSeries::zero(2)};
    CHECK_THROWS_AS((void)nonlinear_residual(nl, u, 4), std::invalid_argument);
}
