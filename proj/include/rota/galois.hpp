#pragma once

#include "rota/series.hpp"
#include "rota/umbral.hpp"

#include <string>
#include <vector>

namespace rota {

// Modified Wronskian: determinant of the matrix whose row i holds the
// i-th difference of each solution, multiplied with the star product.
// Solutions are p-basis coefficient vectors; the difference acts on
// coefficients as (b_k) -> ((k+1) b_{k+1}).
TaylorSeries star_wronskian(const std::vector<TaylorSeries>& solutions);

struct FundamentalVerdict {
    bool fundamental = false;
    Rational witness = 0;              // constant term of the star-Wronskian
    std::vector<long> failed_residuals; // indices of candidates failing the certificate
};

// Decides whether the candidates form a fundamental system for a
// constant-coefficient homogeneous linear ODE: each candidate must pass
// the lattice residual certificate through nmax, and the star-Wronskian
// must be a unit of the truncated algebra (nonzero constant term).
FundamentalVerdict is_fundamental_system(const LinearODESpec& ode,
                                         const std::vector<TaylorSeries>& solutions,
                                         long nmax);

} // namespace rota
