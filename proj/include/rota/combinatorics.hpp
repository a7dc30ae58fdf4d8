#pragma once

#include "rota/rational.hpp"

#include <utility>

namespace rota {

using RationalPair = std::pair<Rational, Rational>;

// n! for n >= 0. Throws for negative n; callers wanting the vanishing
// convention use rfact instead.
Integer factorial(long n);

// C(n,k); 0 outside 0 <= k <= n (including all n < 0). Out-of-range
// terms in the combinatorial sums are expected to vanish.
Rational binomial(long n, long k);

// Generalized binomial C(a,k) = a(a-1)...(a-k+1)/k! for rational a,
// integer k >= 0; 0 for k < 0.
Rational binomial(const Rational& a, long k);

// Reciprocal factorial: 1/m! for m >= 0, 0 for m < 0. The vanishing
// convention is what truncates every multi-index sum in the residual
// evaluators.
Rational rfact(long m);

// Falling factorial n!/(n-k)! = n(n-1)...(n-k+1); 0 when k > n or k < 0.
Rational falling_factorial(long n, long k);

// Pochhammer symbol (a)_k = a(a+1)...(a+k-1), computed as an exact
// integer-length product.
Rational pochhammer(const Rational& a, long k);

// Each identity evaluator returns (LHS, RHS); the caller asserts
// equality. Evaluation is always by direct summation, never via the
// closed form being tested.

// sum_k (-1)^k C(n,k) = delta_{n,0}
RationalPair identity_alternating(long n);

// sum_k C(s,k) C(m,r-k) = C(m+s,r)
RationalPair identity_vandermonde(long s, long m, long r);

// sum_k (-1)^{s-k} C(s,k) C(n+k,m+s) = C(n,m)
RationalPair identity_delt(long s, long n, long m);

// sum_{k=j}^{n+s-r} (-1)^{k-j} C(n-r,k-s) C(k,j)
//   = sum_i (-1)^{s-i} C(s,i) delta_{n-r+i,j}
RationalPair identity_key(long n, long r, long s, long j);

} // namespace rota
