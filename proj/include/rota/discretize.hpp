#pragma once

#include "rota/series.hpp"
#include "rota/umbral.hpp"

#include <vector>

namespace rota {

// Coefficient-space image of a lattice sequence; for u built by the
// interpolating transform, zeta_n telescopes back to b_n.
struct FourierCoefficients {
    std::vector<Rational> zeta;

    long nmax() const { return static_cast<long>(zeta.size()) - 1; }
    const Rational& operator[](long n) const { return zeta[static_cast<std::size_t>(n)]; }
};

// Umbral image of x^r y^(s):  n! h^r/(n-r)! (Delta_h^s u)_{n-r};
// 0 when n < r. Requires n-r+s <= u.nmax().
Rational monomial_correspondence(const LatticeSequence& u, long r, long s, long n);

// Exact value of the discrete image of the linear ODE at site n,
// built from the monomial correspondences, with the inhomogeneity
// entering as the image of c_0. Requires n + N <= u.nmax().
Rational linear_residual(const LinearODESpec& ode, const LatticeSequence& u, long n);

// The same value through the fully expanded binomial-window form; the
// two routes must agree on every input, solution or not.
Rational linear_residual_expanded(const LinearODESpec& ode, const LatticeSequence& u, long n);

// Image of y^r as the multi-index sum
//   sum_{j_1..j_r} n! (1-r)^{n-sum j} / (n-sum j)!  prod u_{j_i}/j_i!
// with 0^0 = 1 (so r=1 collapses to u_n) and vanishing reciprocal
// factorials truncating the sum. r = 0 yields 1.
Rational power_image(const LatticeSequence& u, long r, long n);

// Image of x^m y^r: 0 for n < m, else h^m times the power sum with n
// replaced by n-m in the exponent and factorial (the leading n! stays).
Rational shifted_power_image(const LatticeSequence& u, long r, long mshift, long n);

// Image of a(x) y^r: linear combination of shifted power images over
// the Taylor coefficients of a.
Rational coeff_power_image(const LatticeSequence& u, const TaylorSeries& acoeffs,
                           long r, long n);

// Discrete image of y^(m) - sum_r a_r(x) y^r at site n, in the
// window-normalized form
//   sum_i (-1)^{m-i} C(m,i) u_{n+i}  -  h^m sum_r image(a_r y^r).
// Requires n + m <= u.nmax().
Rational nonlinear_residual(const NonlinearODESpec& ode, const LatticeSequence& u, long n);

// Coefficient-space dynamics for constant-coefficient nonlinear ODEs:
//   (n+m)!/n! zeta_{n+m} - [ sum_{r>=1} a_r conv_r(zeta)_n + a_0 delta_{n0} ].
// Throws on nonconstant coefficients.
Rational fourier_residual(const NonlinearODESpec& ode, const FourierCoefficients& zeta, long n);

// zeta_n = sum_{l<=n} sum_{k<=l} (-1)^{n-l} b_k / ((n-l)!(l-k)!),
// evaluated as the literal double sum; equals b_n elementwise when
// u = forward_transform(b).
FourierCoefficients fourier_coefficients(const TaylorSeries& b, const LatticeSequence& u);

} // namespace rota
