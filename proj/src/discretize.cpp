#include "rota/discretize.hpp"

#include "rota/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rota {

namespace {

Rational rational_pow(const Rational& x, long e)
{
    Rational acc = 1;
    for (long i = 0; i < e; ++i)
        acc *= x;
    return acc;
}

// (1-r)^e with the 0^0 = 1 convention
Rational one_minus_r_pow(long r, long e)
{
    if (r == 1)
        return e == 0 ? 1 : 0;
    return rational_pow(Rational(1 - r), e);
}

// sum over the multi-index (j_1..j_r) in [0,n]^r of
//   n!/(n - shift - sum j)! (1-r)^{n - shift - sum j} prod u_{j_i}/j_i!
// with terms beyond sum j = n - shift vanishing. Recursion over the
// index positions with early exit keeps the cost at the number of
// surviving terms.
Rational power_sum(const LatticeSequence& u, long r, long shift, long n,
                   long pos, long jsum, const Rational& prod)
{
    if (pos == r) {
        const long e = n - shift - jsum;
        if (e < 0)
            return 0;
        return falling_factorial(n, shift + jsum) * one_minus_r_pow(r, e) * prod;
    }
    Rational acc = 0;
    const long j_top = std::min(n, n - shift - jsum);
    for (long j = 0; j <= j_top; ++j)
        acc += power_sum(u, r, shift, n, pos + 1, jsum + j, prod * u[j] * rfact(j));
    return acc;
}

// image of c_0(x): sum_s gamma_s n! h^s/(n-s)!
Rational inhomogeneity_image(const TaylorSeries& c0, const LatticeSequence& u, long n)
{
    Rational acc = 0;
    for (long s = 0; s <= std::min(n, c0.order()); ++s)
        acc += c0[s] * falling_factorial(n, s) * rational_pow(u.h, s);
    return acc;
}

void check_linear_window(const LinearODESpec& ode, const LatticeSequence& u, long n)
{
    ode.validate();
    u.validate();
    if (n < 0 || n + ode.order_n > u.nmax())
        throw std::invalid_argument("lattice window too small for the residual stencil");
}

} // namespace

Rational monomial_correspondence(const LatticeSequence& u, long r, long s, long n)
{
    if (r < 0 || s < 0 || n < 0)
        throw std::invalid_argument("indices must be nonnegative");
    if (n < r)
        return 0;
    if (n - r + s > u.nmax())
        throw std::invalid_argument("difference window exceeds available lattice values");
    return falling_factorial(n, r) * rational_pow(u.h, r) * delta_power_at(u, s, n - r);
}

Rational linear_residual(const LinearODESpec& ode, const LatticeSequence& u, long n)
{
    check_linear_window(ode, u, n);
    Rational acc = inhomogeneity_image(ode.c0, u, n);
    for (long i = 0; i <= ode.order_n; ++i) {
        const auto& ai = ode.a[static_cast<std::size_t>(i)];
        for (long s = 0; s <= std::min(n, ai.order()); ++s) {
            if (ai[s] == 0)
                continue;
            acc += ai[s] * monomial_correspondence(u, s, i, n);
        }
    }
    return acc;
}

Rational linear_residual_expanded(const LinearODESpec& ode, const LatticeSequence& u, long n)
{
    check_linear_window(ode, u, n);
    Rational acc = inhomogeneity_image(ode.c0, u, n);
    for (long i = 0; i <= ode.order_n; ++i) {
        const auto& ai = ode.a[static_cast<std::size_t>(i)];
        const Rational hi = rational_pow(u.h, i);
        for (long s = 0; s <= std::min(n, ai.order()); ++s) {
            if (ai[s] == 0)
                continue;
            // alpha_{is} = s! a_{i,s}, so C(n,s) alpha_{is} = n!/(n-s)! a_{i,s}
            const Rational front = ai[s] * falling_factorial(n, s) * rational_pow(u.h, s) / hi;
            for (long k = 0; k <= i; ++k) {
                const Rational term = front * binomial(i, k) * u[n - s + k];
                acc += ((i - k) % 2 == 0) ? term : -term;
            }
        }
    }
    return acc;
}

Rational power_image(const LatticeSequence& u, long r, long n)
{
    if (r < 0)
        throw std::invalid_argument("power must be nonnegative");
    if (n < 0 || n > u.nmax())
        throw std::invalid_argument("site index outside lattice");
    return power_sum(u, r, 0, n, 0, 0, 1);
}

Rational shifted_power_image(const LatticeSequence& u, long r, long mshift, long n)
{
    if (r < 0 || mshift < 0)
        throw std::invalid_argument("power and shift must be nonnegative");
    if (n < 0 || n > u.nmax())
        throw std::invalid_argument("site index outside lattice");
    if (n < mshift)
        return 0;
    return rational_pow(u.h, mshift) * power_sum(u, r, mshift, n, 0, 0, 1);
}

Rational coeff_power_image(const LatticeSequence& u, const TaylorSeries& acoeffs,
                           long r, long n)
{
    Rational acc = 0;
    for (long s = 0; s <= std::min(n, acoeffs.order()); ++s) {
        if (acoeffs[s] == 0)
            continue;
        acc += acoeffs[s] * shifted_power_image(u, r, s, n);
    }
    return acc;
}

Rational nonlinear_residual(const NonlinearODESpec& ode, const LatticeSequence& u, long n)
{
    ode.validate();
    u.validate();
    const long m = ode.deriv_m;
    if (n < 0 || n + m > u.nmax())
        throw std::invalid_argument("lattice window too small for the residual stencil");

    Rational acc = 0;
    for (long i = 0; i <= m; ++i) {
        const Rational term = binomial(m, i) * u[n + i];
        acc += ((m - i) % 2 == 0) ? term : -term;
    }
    const Rational hm = rational_pow(u.h, m);
    for (long r = 0; r <= ode.degree_n; ++r)
        acc -= hm * coeff_power_image(u, ode.a[static_cast<std::size_t>(r)], r, n);
    return acc;
}

Rational fourier_residual(const NonlinearODESpec& ode, const FourierCoefficients& zeta, long n)
{
    ode.validate();
    if (!ode.constant_coefficients())
        throw std::invalid_argument("fourier dynamics supports constant coefficients only");
    const long m = ode.deriv_m;
    if (n < 0 || n + m > zeta.nmax())
        throw std::invalid_argument("zeta vector too short for site n");

    Rational lhs = falling_factorial(n + m, m) * zeta[n + m];

    TaylorSeries z = TaylorSeries::zero(n);
    for (long k = 0; k <= n; ++k)
        z[k] = zeta[k];

    Rational rhs = (n == 0) ? ode.a[0][0] : Rational(0); // b_0 enters at n = 0 only
    TaylorSeries pw = z;
    for (long r = 1; r <= ode.degree_n; ++r) {
        rhs += ode.a[static_cast<std::size_t>(r)][0] * pw[n];
        if (r < ode.degree_n)
            pw = series_mul(pw, z);
    }
    return lhs - rhs;
}

FourierCoefficients fourier_coefficients(const TaylorSeries& b, const LatticeSequence& u)
{
    u.validate();
    if (b.order() < u.nmax())
        throw std::invalid_argument("series truncation order below the lattice size");
    FourierCoefficients out;
    for (long n = 0; n <= u.nmax(); ++n) {
        Rational acc = 0;
        for (long l = 0; l <= n; ++l)
            for (long k = 0; k <= l; ++k) {
                const Rational term = b[k] * rfact(n - l) * rfact(l - k);
                acc += ((n - l) % 2 == 0) ? term : -term;
            }
        out.zeta.push_back(acc);
    }
    return out;
}

} // namespace rota
