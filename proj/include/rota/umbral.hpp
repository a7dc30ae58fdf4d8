#pragma once

#include "rota/rational.hpp"
#include "rota/series.hpp"

#include <map>
#include <vector>

namespace rota {

// Values u_0..u_nmax on the uniform mesh x_n = n*h. The spacing is
// carried on the sequence so transforms cannot mix meshes.
struct LatticeSequence {
    std::vector<Rational> values;
    Rational h = 1;

    long nmax() const { return static_cast<long>(values.size()) - 1; }
    const Rational& operator[](long n) const { return values[static_cast<std::size_t>(n)]; }

    void validate() const; // throws std::invalid_argument
};

// A difference operator (1/sigma) * sum_{k=l}^{m} alpha_k T^k subject
// to sum alpha_k = 0 and sum k alpha_k = 1.
struct DeltaOperatorSpec {
    Rational sigma = 1;
    std::map<long, Rational> alpha; // shift offset -> weight

    long lower() const { return alpha.begin()->first; }
    long upper() const { return alpha.rbegin()->first; }
};

// Degree-k polynomial in the monomial basis with p_0 = 1 and
// p_k(0) = 0 for k > 0.
struct BasicPolynomial {
    long degree = 0;
    std::vector<Rational> coeffs; // monomial basis, length degree+1
};

// p_k(n*h) = n! h^k / (n-k)!  for n >= k, else 0.
Rational lower_factorial(long k, long n, const Rational& h);

// interpolating transform: u_n = sum_{k<=n} b_k p_k(n h). Requires
// b.order() >= nmax.
LatticeSequence forward_transform(const TaylorSeries& b, long nmax, const Rational& h);

// exact inverse: b_k = h^{-k} sum_{j<=k} (-1)^{k-j} u_j / (j!(k-j)!)
TaylorSeries inverse_transform(const LatticeSequence& u);

// coefficient convolution in the basic-polynomial basis
// (p_n * p_m = p_{n+m}); unit is [1,0,...]
TaylorSeries star_product(const TaylorSeries& f, const TaylorSeries& g);

// i-th forward-difference power by the binomial window:
// (Delta_h^i u)_n = h^{-i} sum_{k<=i} (-1)^{i-k} C(i,k) u_{n+k},
// defined for n <= nmax - i.
Rational delta_power_at(const LatticeSequence& u, long i, long n);
LatticeSequence delta_power(const LatticeSequence& u, long i);

// Checks the two stencil constraints exactly (throws with the violated
// constraint named) and returns the approximation order p: the stencil
// reproduces d/dx up to O(sigma^p).
long validate_delta_operator(const DeltaOperatorSpec& spec);

// Unique basic sequence p_0..p_kmax for the operator: Qp_n = n p_{n-1},
// p_n(0) = 0, solved degree by degree as a triangular system.
std::vector<BasicPolynomial> basic_polynomials(const DeltaOperatorSpec& spec, long kmax);

// monomial-basis evaluation helper for BasicPolynomial
Rational eval_polynomial(const BasicPolynomial& p, const Rational& x);

} // namespace rota
