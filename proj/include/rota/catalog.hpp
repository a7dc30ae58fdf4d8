#pragma once

#include "rota/discretize.hpp"
#include "rota/series.hpp"
#include "rota/umbral.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace rota {

using Params = std::map<std::string, Rational>;

// A named problem together with an analytic solution prefix; the
// residual sweep is run at construction time, so an exposed entry is
// already certified through `certified_through`.
struct CatalogEntry {
    std::string name;
    std::variant<LinearODESpec, NonlinearODESpec> problem;
    TaylorSeries solution; // Taylor coefficients b_0..b_K
    Params params;
    long certified_through = 0;

    bool is_linear() const { return std::holds_alternative<LinearODESpec>(problem); }
    long stencil_width() const;
};

// Finite Gauss sum sum_{k<=n} (a)_k (b)_k / ((c)_k k!) * n!/(n-k)!,
// the lattice image of the 2F1 Taylor series. Throws if a Pochhammer
// factor (c)_k vanishes in range.
Rational gauss_sum(const Rational& a, const Rational& b, const Rational& c, long n);

// Monomial coefficients of the classical Jacobi polynomial
// P_m^(alpha,beta), exact.
std::vector<Rational> jacobi_polynomial(long m, const Rational& alpha, const Rational& beta);

// Lattice image of the Jacobi polynomial at site n (h = 1).
Rational discrete_jacobi(long m, const Rational& alpha, const Rational& beta, long n);

// Hand-coded stencils of the worked examples, kept independent of the
// generic residual machinery so the two routes can be cross-checked.
Rational gaussian_stencil_residual(const LatticeSequence& u, long n);
Rational hypergeometric_stencil_residual(const Rational& a, const Rational& b,
                                         const Rational& c, const LatticeSequence& u, long n);
Rational jacobi_stencil_residual(long m, const Rational& alpha, const Rational& beta,
                                 const LatticeSequence& u, long n);

// Known names: gaussian, hypergeometric, jacobi, riccati_xk, painleve1.
// Unknown parameters are rejected; missing ones take the documented
// defaults. The entry is certified before being returned.
CatalogEntry build_example(const std::string& name, const Params& params);

// Residual of the entry's difference equation at site n for a given
// lattice (generic Theorem 3.1/3.2 machinery).
Rational entry_residual(const CatalogEntry& entry, const LatticeSequence& u, long n);

struct LimitRow {
    Rational h;
    long n = 0;
    Rational lattice_value;
    double error = 0.0;
};

struct LimitTable {
    Rational x_star;
    Rational exact_value;     // truncated-series value at x_star
    std::vector<LimitRow> rows;
    std::vector<double> ratios; // e(h_i)/e(h_{i+1})
};

// Convergence study on x = n h fixed: each h must divide x_star
// exactly and the resulting n must fit the solution truncation.
LimitTable continuum_limit_study(const CatalogEntry& entry,
                                 const std::vector<Rational>& hs,
                                 const Rational& x_star);

std::vector<std::string> catalog_names();

} // namespace rota
