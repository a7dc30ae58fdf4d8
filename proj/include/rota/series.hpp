#pragma once

#include "rota/rational.hpp"

#include <cstddef>
#include <vector>

namespace rota {

// Truncated power series y(x) = sum_{k=0}^{K} b_k x^k. The same
// container doubles as a coefficient vector in the basic-polynomial
// basis (see umbral.hpp). The truncation order is explicit and never
// silently extended.
class TaylorSeries {
public:
    TaylorSeries() = default;
    explicit TaylorSeries(std::vector<Rational> coeffs);

    // all-zero series of truncation order k
    static TaylorSeries zero(long k);
    // delta-vector: coefficient 1 at index k, truncation order k_top
    static TaylorSeries monomial(long k, long k_top);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& operator[](long k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    Rational& operator[](long k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const TaylorSeries& other) const = default;

private:
    std::vector<Rational> coeffs_{Rational(0)};
};

// Linear ODE  a_N(x) y^(N) + ... + a_1(x) y' + a_0(x) y + c_0(x) = 0.
// Coefficient series are stored as plain Taylor coefficients; the
// factorial-normalized alpha_{ik} = k! * a[i][k] are derived where the
// residual formulas need them.
struct LinearODESpec {
    long order_n = 1;             // N >= 1
    std::vector<TaylorSeries> a;  // a[0..N]
    TaylorSeries c0;              // inhomogeneity

    void validate() const; // throws std::invalid_argument
    bool constant_coefficients() const;
};

// Nonlinear ODE  y^(m) = a_N(x) y^N + ... + a_1(x) y + a_0(x).
struct NonlinearODESpec {
    long deriv_m = 1;             // m >= 1
    long degree_n = 1;            // N >= 1
    std::vector<TaylorSeries> a;  // a[0..N]

    void validate() const;
    bool constant_coefficients() const;
};

TaylorSeries series_add(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries series_scale(const Rational& c, const TaylorSeries& f);

// Cauchy product truncated at the common order. Throws on mismatched
// truncation orders.
TaylorSeries series_mul(const TaylorSeries& f, const TaylorSeries& g);

// f^r with f^0 = [1,0,...]; r >= 0.
TaylorSeries series_pow(const TaylorSeries& f, long r);

// termwise d/dx: b_k -> (k+1) b_{k+1}, keeping the truncation order
// (top coefficient set to zero, which loses one order of information;
// callers budget their truncation accordingly).
TaylorSeries series_derivative(const TaylorSeries& f);

// exact Horner evaluation of the truncated polynomial
Rational eval_series(const TaylorSeries& f, const Rational& x);

// Power-series solver at an ordinary point x=0: returns b_0..b_K with
// b_k = y^(k)(0)/k! for k < N taken from init. Requires a_N(0) != 0
// and K >= N.
TaylorSeries solve_linear_series(const LinearODESpec& ode,
                                 const std::vector<Rational>& init, long k_top);

// Same for y^(m) = sum_r a_r(x) y^r with init = y(0)..y^(m-1)(0),
// K >= m.
TaylorSeries solve_nonlinear_series(const NonlinearODESpec& ode,
                                    const std::vector<Rational>& init, long k_top);

// Coefficients of the residual series obtained by substituting b back
// into the ODE; valid through order K-N (resp. K-m). Used by the
// oracle-consistency tests and the verify pipeline.
std::vector<Rational> linear_ode_defect(const LinearODESpec& ode, const TaylorSeries& b);
std::vector<Rational> nonlinear_ode_defect(const NonlinearODESpec& ode, const TaylorSeries& b);

} // namespace rota
