#include "rota/series.hpp"

#include "rota/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace rota {

TaylorSeries::TaylorSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("TaylorSeries needs at least the constant coefficient");
}

TaylorSeries TaylorSeries::zero(long k)
{
    if (k < 0)
        throw std::invalid_argument("negative truncation order");
    return TaylorSeries(std::vector<Rational>(static_cast<std::size_t>(k) + 1, Rational(0)));
}

TaylorSeries TaylorSeries::monomial(long k, long k_top)
{
    if (k < 0 || k > k_top)
        throw std::invalid_argument("monomial degree outside truncation window");
    TaylorSeries f = zero(k_top);
    f[k] = 1;
    return f;
}

void LinearODESpec::validate() const
{
    if (order_n < 1)
        throw std::invalid_argument("linear ODE order must be >= 1");
    if (static_cast<long>(a.size()) != order_n + 1)
        throw std::invalid_argument("linear ODE needs exactly N+1 coefficient series");
    const long k = a.front().order();
    for (const auto& ai : a)
        if (ai.order() != k)
            throw std::invalid_argument("coefficient series must share one truncation order");
    if (c0.order() != k)
        throw std::invalid_argument("inhomogeneity must share the coefficient truncation order");
    bool leading_nonzero = false;
    for (const auto& c : a.back().coeffs())
        if (c != 0)
            leading_nonzero = true;
    if (!leading_nonzero)
        throw std::invalid_argument("leading coefficient a_N is identically zero");
}

bool LinearODESpec::constant_coefficients() const
{
    auto is_const = [](const TaylorSeries& f) {
        for (long k = 1; k <= f.order(); ++k)
            if (f[k] != 0)
                return false;
        return true;
    };
    for (const auto& ai : a)
        if (!is_const(ai))
            return false;
    return is_const(c0);
}

void NonlinearODESpec::validate() const
{
    if (deriv_m < 1)
        throw std::invalid_argument("derivative order m must be >= 1");
    if (degree_n < 1)
        throw std::invalid_argument("degree N must be >= 1");
    if (static_cast<long>(a.size()) != degree_n + 1)
        throw std::invalid_argument("nonlinear ODE needs exactly N+1 coefficient series");
    const long k = a.front().order();
    for (const auto& ar : a)
        if (ar.order() != k)
            throw std::invalid_argument("coefficient series must share one truncation order");
}

bool NonlinearODESpec::constant_coefficients() const
{
    for (const auto& ar : a)
        for (long k = 1; k <= ar.order(); ++k)
            if (ar[k] != 0)
                return false;
    return true;
}

TaylorSeries series_add(const TaylorSeries& f, const TaylorSeries& g)
{
    if (f.order() != g.order())
        throw std::invalid_argument("series_add: mismatched truncation orders");
    TaylorSeries out = f;
    for (long k = 0; k <= g.order(); ++k)
        out[k] += g[k];
    return out;
}

TaylorSeries series_scale(const Rational& c, const TaylorSeries& f)
{
    TaylorSeries out = f;
    for (long k = 0; k <= f.order(); ++k)
        out[k] *= c;
    return out;
}

TaylorSeries series_mul(const TaylorSeries& f, const TaylorSeries& g)
{
    if (f.order() != g.order())
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    const long k_top = f.order();
    TaylorSeries out = TaylorSeries::zero(k_top);
    for (long k = 0; k <= k_top; ++k)
        for (long j = 0; j <= k; ++j)
            out[k] += f[j] * g[k - j];
    return out;
}

TaylorSeries series_pow(const TaylorSeries& f, long r)
{
    if (r < 0)
        throw std::invalid_argument("series_pow: negative exponent");
    TaylorSeries out = TaylorSeries::monomial(0, f.order());
    for (long i = 0; i < r; ++i)
        out = series_mul(out, f);
    return out;
}

TaylorSeries series_derivative(const TaylorSeries& f)
{
    TaylorSeries out = TaylorSeries::zero(f.order());
    for (long k = 0; k + 1 <= f.order(); ++k)
        out[k] = Rational(k + 1) * f[k + 1];
    return out;
}

Rational eval_series(const TaylorSeries& f, const Rational& x)
{
    Rational acc = 0;
    for (long k = f.order(); k >= 0; --k)
        acc = Rational(acc * x) + f[k];
    return acc;
}

namespace {

// coefficient s of the stored series, reading it as an exact
// polynomial (zero beyond the truncation order)
inline Rational poly_coeff(const TaylorSeries& f, long s)
{
    return (s >= 0 && s <= f.order()) ? f[s] : Rational(0);
}

} // namespace

TaylorSeries solve_linear_series(const LinearODESpec& ode,
                                 const std::vector<Rational>& init, long k_top)
{
    ode.validate();
    const long n_ord = ode.order_n;
    if (static_cast<long>(init.size()) != n_ord)
        throw std::invalid_argument("init must supply y(0)..y^(N-1)(0)");
    if (k_top < n_ord)
        throw std::invalid_argument("truncation order below the ODE order");
    if (ode.a[static_cast<std::size_t>(n_ord)][0] == 0)
        throw std::invalid_argument("singular point: a_N(0) = 0");

    TaylorSeries b = TaylorSeries::zero(k_top);
    for (long k = 0; k < n_ord; ++k)
        b[k] = init[static_cast<std::size_t>(k)] * rfact(k);

    const Rational lead = ode.a[static_cast<std::size_t>(n_ord)][0];
    // match coefficient of x^t; the only term reaching b_{t+N} is (i,s)=(N,0)
    for (long t = 0; t + n_ord <= k_top; ++t) {
        Rational acc = poly_coeff(ode.c0, t);
        for (long i = 0; i <= n_ord; ++i) {
            const auto& ai = ode.a[static_cast<std::size_t>(i)];
            const long s_top = std::min(t, ai.order());
            for (long s = 0; s <= s_top; ++s) {
                if (i == n_ord && s == 0)
                    continue;
                acc += ai[s] * falling_factorial(t - s + i, i) * b[t - s + i];
            }
        }
        b[t + n_ord] = -acc / (lead * falling_factorial(t + n_ord, n_ord));
    }
    return b;
}

TaylorSeries solve_nonlinear_series(const NonlinearODESpec& ode,
                                    const std::vector<Rational>& init, long k_top)
{
    ode.validate();
    const long m = ode.deriv_m;
    if (static_cast<long>(init.size()) != m)
        throw std::invalid_argument("init must supply y(0)..y^(m-1)(0)");
    if (k_top < m)
        throw std::invalid_argument("truncation order below the derivative order");

    TaylorSeries b = TaylorSeries::zero(k_top);
    for (long k = 0; k < m; ++k)
        b[k] = init[static_cast<std::size_t>(k)] * rfact(k);

    for (long t = 0; t + m <= k_top; ++t) {
        // powers of the prefix b_0..b_t, which is already known
        TaylorSeries prefix = TaylorSeries::zero(t);
        for (long k = 0; k <= t; ++k)
            prefix[k] = b[k];
        Rational rhs = 0;
        TaylorSeries pw = TaylorSeries::monomial(0, t);
        for (long r = 0; r <= ode.degree_n; ++r) {
            const auto& ar = ode.a[static_cast<std::size_t>(r)];
            for (long s = 0; s <= std::min(t, ar.order()); ++s)
                rhs += ar[s] * pw[t - s];
            pw = series_mul(pw, prefix);
        }
        b[t + m] = rhs / falling_factorial(t + m, m);
    }
    return b;
}

std::vector<Rational> linear_ode_defect(const LinearODESpec& ode, const TaylorSeries& b)
{
    ode.validate();
    const long n_ord = ode.order_n;
    const long t_top = b.order() - n_ord;
    std::vector<Rational> defect;
    for (long t = 0; t <= t_top; ++t) {
        Rational acc = poly_coeff(ode.c0, t);
        for (long i = 0; i <= n_ord; ++i) {
            const auto& ai = ode.a[static_cast<std::size_t>(i)];
            for (long s = 0; s <= std::min(t, ai.order()); ++s)
                acc += ai[s] * falling_factorial(t - s + i, i) * b[t - s + i];
        }
        defect.push_back(acc);
    }
    return defect;
}

std::vector<Rational> nonlinear_ode_defect(const NonlinearODESpec& ode, const TaylorSeries& b)
{
    ode.validate();
    const long m = ode.deriv_m;
    const long t_top = b.order() - m;
    std::vector<TaylorSeries> powers;
    powers.push_back(TaylorSeries::monomial(0, b.order()));
    for (long r = 1; r <= ode.degree_n; ++r)
        powers.push_back(series_mul(powers.back(), b));

    std::vector<Rational> defect;
    for (long t = 0; t <= t_top; ++t) {
        Rational acc = falling_factorial(t + m, m) * b[t + m];
        for (long r = 0; r <= ode.degree_n; ++r) {
            const auto& ar = ode.a[static_cast<std::size_t>(r)];
            for (long s = 0; s <= std::min(t, ar.order()); ++s)
                acc -= ar[s] * powers[static_cast<std::size_t>(r)][t - s];
        }
        defect.push_back(acc);
    }
    return defect;
}

} // namespace rota
