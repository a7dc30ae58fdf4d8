#include "rota/catalog.hpp"

#include "rota/combinatorics.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace rota {

namespace {

constexpr long kLinearTruncation = 60;
constexpr long kLinearCertifyThrough = 50;
constexpr long kNonlinearTruncation = 24;
constexpr long kNonlinearCertifyThrough = 20;

TaylorSeries padded_series(std::vector<Rational> coeffs, long k_top)
{
    coeffs.resize(static_cast<std::size_t>(k_top) + 1, Rational(0));
    return TaylorSeries(std::move(coeffs));
}

long require_nonneg_integer(const Params& params, const std::string& key, long fallback)
{
    auto it = params.find(key);
    if (it == params.end())
        return fallback;
    if (denominator(it->second) != 1 || it->second < 0)
        throw std::invalid_argument("parameter " + key + " must be a nonnegative integer");
    return numerator(it->second).convert_to<long>();
}

Rational param_or(const Params& params, const std::string& key, const Rational& fallback)
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const Params& params, std::initializer_list<const char*> known)
{
    for (const auto& [key, value] : params) {
        bool ok = false;
        for (const char* k : known)
            if (key == k)
                ok = true;
        if (!ok)
            throw std::invalid_argument("unknown parameter: " + key);
    }
}

std::vector<Rational> poly_mul(const std::vector<Rational>& f, const std::vector<Rational>& g)
{
    std::vector<Rational> out(f.size() + g.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] += f[i] * g[j];
    return out;
}

void certify(CatalogEntry& entry, long n_top)
{
    const long width = entry.stencil_width();
    const LatticeSequence u = forward_transform(entry.solution, n_top + width, 1);
    for (long n = 0; n <= n_top; ++n)
        if (entry_residual(entry, u, n) != 0)
            throw std::runtime_error("catalog entry " + entry.name
                                     + " failed its residual certificate at n = "
                                     + std::to_string(n));
    entry.certified_through = n_top;
}

CatalogEntry build_gaussian(const Params& params)
{
    reject_unknown_params(params, {});
    LinearODESpec ode;
    ode.order_n = 1;
    ode.a = {padded_series({Rational(0), Rational(1)}, kLinearTruncation), // a_0 = x
             padded_series({Rational(1)}, kLinearTruncation)};             // a_1 = 1
    ode.c0 = TaylorSeries::zero(kLinearTruncation);

    // e^{-x^2/2}: b_{2j} = (-1/2)^j / j!
    TaylorSeries b = TaylorSeries::zero(kLinearTruncation);
    Rational c = 1;
    for (long j = 0; 2 * j <= kLinearTruncation; ++j) {
        b[2 * j] = c * rfact(j);
        c *= Rational(-1, 2);
    }

    CatalogEntry entry{"gaussian", ode, std::move(b), params};
    certify(entry, kLinearCertifyThrough);
    return entry;
}

CatalogEntry build_hypergeometric(const Params& params)
{
    reject_unknown_params(params, {"a", "b", "c"});
    const Rational a = param_or(params, "a", 1);
    const Rational b = param_or(params, "b", 1);
    const Rational c = param_or(params, "c", 1);
    for (long k = 0; k <= kLinearTruncation; ++k)
        if (c + k == 0)
            throw std::invalid_argument("hypergeometric parameter c hits a nonpositive integer");

    LinearODESpec ode;
    ode.order_n = 2;
    ode.a = {padded_series({-a * b}, kLinearTruncation),                     // a_0
             padded_series({c, -(a + b + 1)}, kLinearTruncation),            // a_1
             padded_series({Rational(0), Rational(1), Rational(-1)}, kLinearTruncation)}; // a_2
    ode.c0 = TaylorSeries::zero(kLinearTruncation);

    TaylorSeries series = TaylorSeries::zero(kLinearTruncation);
    for (long k = 0; k <= kLinearTruncation; ++k)
        series[k] = pochhammer(a, k) * pochhammer(b, k) / pochhammer(c, k) * rfact(k);

    CatalogEntry entry{"hypergeometric", ode, std::move(series),
                       Params{{"a", a}, {"b", b}, {"c", c}}};
    certify(entry, kLinearCertifyThrough);
    return entry;
}

CatalogEntry build_jacobi(const Params& params)
{
    reject_unknown_params(params, {"m", "alpha", "beta"});
    const long m = require_nonneg_integer(params, "m", 1);
    const Rational alpha = param_or(params, "alpha", 0);
    const Rational beta = param_or(params, "beta", 0);

    LinearODESpec ode;
    ode.order_n = 2;
    const Rational lambda = Rational(m) * (Rational(m) + alpha + beta + 1);
    ode.a = {padded_series({lambda}, kLinearTruncation),
             padded_series({beta - alpha, -(alpha + beta + 2)}, kLinearTruncation),
             padded_series({Rational(1), Rational(0), Rational(-1)}, kLinearTruncation)};
    ode.c0 = TaylorSeries::zero(kLinearTruncation);

    CatalogEntry entry{"jacobi", ode,
                       padded_series(jacobi_polynomial(m, alpha, beta), kLinearTruncation),
                       Params{{"m", Rational(m)}, {"alpha", alpha}, {"beta", beta}}};
    certify(entry, kLinearCertifyThrough);
    return entry;
}

CatalogEntry build_riccati_xk(const Params& params)
{
    reject_unknown_params(params, {"k", "c1"});
    const long k = require_nonneg_integer(params, "k", 1);
    const Rational c1 = param_or(params, "c1", 1);
    if (c1 == 0)
        throw std::invalid_argument("parameter c1 must be nonzero");
    if (k > kNonlinearTruncation)
        throw std::invalid_argument("parameter k exceeds the catalog truncation");

    NonlinearODESpec ode;
    ode.deriv_m = 1;
    ode.degree_n = 2;
    std::vector<Rational> xk(static_cast<std::size_t>(k) + 1, Rational(0));
    xk.back() = 1;
    ode.a = {TaylorSeries::zero(kNonlinearTruncation),
             TaylorSeries::zero(kNonlinearTruncation),
             padded_series(std::move(xk), kNonlinearTruncation)};

    // y = -(k+1)/(x^{k+1} + c1): b_{j(k+1)} = -(k+1)(-1)^j / c1^{j+1}
    TaylorSeries b = TaylorSeries::zero(kNonlinearTruncation);
    Rational c1pow = c1;
    for (long j = 0; j * (k + 1) <= kNonlinearTruncation; ++j) {
        const Rational mag = Rational(-(k + 1)) / c1pow;
        b[j * (k + 1)] = (j % 2 == 0) ? mag : -mag;
        c1pow *= c1;
    }

    CatalogEntry entry{"riccati_xk", ode, std::move(b),
                       Params{{"k", Rational(k)}, {"c1", c1}}};
    certify(entry, kNonlinearCertifyThrough);
    return entry;
}

CatalogEntry build_painleve1(const Params& params)
{
    reject_unknown_params(params, {"y0", "y1"});
    const Rational y0 = param_or(params, "y0", 0);
    const Rational y1 = param_or(params, "y1", 0);

    NonlinearODESpec ode;
    ode.deriv_m = 2;
    ode.degree_n = 2;
    ode.a = {padded_series({Rational(0), Rational(1)}, kNonlinearTruncation), // a_0 = x
             TaylorSeries::zero(kNonlinearTruncation),
             padded_series({Rational(6)}, kNonlinearTruncation)};

    CatalogEntry entry{"painleve1", ode,
                       solve_nonlinear_series(ode, {y0, y1}, kNonlinearTruncation),
                       Params{{"y0", y0}, {"y1", y1}}};
    certify(entry, kNonlinearCertifyThrough);
    return entry;
}

} // namespace

long CatalogEntry::stencil_width() const
{
    if (is_linear())
        return std::get<LinearODESpec>(problem).order_n;
    return std::get<NonlinearODESpec>(problem).deriv_m;
}

Rational gauss_sum(const Rational& a, const Rational& b, const Rational& c, long n)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    Rational acc = 0;
    for (long k = 0; k <= n; ++k) {
        const Rational ck = pochhammer(c, k);
        if (ck == 0)
            throw std::invalid_argument("Pochhammer (c)_k vanishes at k = " + std::to_string(k));
        acc += pochhammer(a, k) * pochhammer(b, k) / ck * rfact(k) * falling_factorial(n, k);
    }
    return acc;
}

std::vector<Rational> jacobi_polynomial(long m, const Rational& alpha, const Rational& beta)
{
    if (m < 0)
        throw std::invalid_argument("Jacobi degree must be nonnegative");
    // P_m = sum_s C(m+alpha, m-s) C(m+beta, s) ((x-1)/2)^s ((x+1)/2)^{m-s}
    std::vector<Rational> acc(static_cast<std::size_t>(m) + 1, Rational(0));
    const std::vector<Rational> minus{Rational(-1, 2), Rational(1, 2)};
    const std::vector<Rational> plus{Rational(1, 2), Rational(1, 2)};
    for (long s = 0; s <= m; ++s) {
        std::vector<Rational> term{binomial(alpha + m, m - s) * binomial(beta + m, s)};
        for (long i = 0; i < s; ++i)
            term = poly_mul(term, minus);
        for (long i = 0; i < m - s; ++i)
            term = poly_mul(term, plus);
        for (std::size_t i = 0; i < term.size(); ++i)
            acc[i] += term[i];
    }
    return acc;
}

Rational discrete_jacobi(long m, const Rational& alpha, const Rational& beta, long n)
{
    const auto coeffs = jacobi_polynomial(m, alpha, beta);
    Rational acc = 0;
    for (long k = 0; k < static_cast<long>(coeffs.size()); ++k)
        acc += coeffs[static_cast<std::size_t>(k)] * lower_factorial(k, n, 1);
    return acc;
}

Rational gaussian_stencil_residual(const LatticeSequence& u, long n)
{
    if (n < 1 || n + 1 > u.nmax())
        throw std::invalid_argument("gaussian stencil needs u_{n-1}..u_{n+1}");
    return u[n + 1] - u[n] + Rational(n) * u[n - 1];
}

Rational hypergeometric_stencil_residual(const Rational& a, const Rational& b,
                                         const Rational& c, const LatticeSequence& u, long n)
{
    if (n < 0 || n + 1 > u.nmax())
        throw std::invalid_argument("hypergeometric stencil needs u up to n+1");
    const Rational rn(n);
    Rational acc = (rn + c) * u[n + 1] - (rn * rn + (a + b + 2) * rn + a * b + c) * u[n];
    if (n >= 1)
        acc += rn * (a + b + 2 * rn) * u[n - 1];
    if (n >= 2)
        acc -= rn * (rn - 1) * u[n - 2];
    return acc;
}

Rational jacobi_stencil_residual(long m, const Rational& alpha, const Rational& beta,
                                 const LatticeSequence& u, long n)
{
    if (n < 0 || n + 2 > u.nmax())
        throw std::invalid_argument("jacobi stencil needs u up to n+2");
    const Rational rn(n), rm(m);
    Rational acc = u[n + 2] - (alpha - beta + 2) * u[n + 1]
                 + (rm * rm - rn * rn + (rm - rn) * (alpha + beta + 1) + alpha - beta + 1) * u[n];
    if (n >= 1)
        acc += rn * (alpha + beta + 2 * rn) * u[n - 1];
    if (n >= 2)
        acc -= rn * (rn - 1) * u[n - 2];
    return acc;
}

CatalogEntry build_example(const std::string& name, const Params& params)
{
    if (name == "gaussian")
        return build_gaussian(params);
    if (name == "hypergeometric")
        return build_hypergeometric(params);
    if (name == "jacobi")
        return build_jacobi(params);
    if (name == "riccati_xk")
        return build_riccati_xk(params);
    if (name == "painleve1")
        return build_painleve1(params);
    throw std::invalid_argument("unknown catalog entry: " + name);
}

Rational entry_residual(const CatalogEntry& entry, const LatticeSequence& u, long n)
{
    if (entry.is_linear())
        return linear_residual(std::get<LinearODESpec>(entry.problem), u, n);
    return nonlinear_residual(std::get<NonlinearODESpec>(entry.problem), u, n);
}

LimitTable continuum_limit_study(const CatalogEntry& entry,
                                 const std::vector<Rational>& hs,
                                 const Rational& x_star)
{
    if (hs.empty())
        throw std::invalid_argument("need at least one mesh spacing");
    LimitTable table;
    table.x_star = x_star;
    table.exact_value = eval_series(entry.solution, x_star);
    for (const Rational& h : hs) {
        if (h <= 0)
            throw std::invalid_argument("mesh spacing must be positive");
        const Rational q = x_star / h;
        if (denominator(q) != 1 || q < 0)
            throw std::invalid_argument("h = " + to_string(h) + " does not divide x_star exactly");
        const long n = numerator(q).convert_to<long>();
        if (n > entry.solution.order())
            throw std::invalid_argument("x_star/h exceeds the solution truncation order");
        const LatticeSequence u = forward_transform(entry.solution, n, h);
        LimitRow row;
        row.h = h;
        row.n = n;
        row.lattice_value = u[n];
        row.error = std::abs(to_double(row.lattice_value - table.exact_value));
        table.rows.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        const double denom = table.rows[i + 1].error;
        table.ratios.push_back(denom == 0.0 ? 0.0 : table.rows[i].error / denom);
    }
    return table;
}

std::vector<std::string> catalog_names()
{
    return {"gaussian", "hypergeometric", "jacobi", "riccati_xk", "painleve1"};
}

} // namespace rota
