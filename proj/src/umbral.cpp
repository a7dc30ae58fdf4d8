#include "rota/umbral.hpp"

#include "rota/combinatorics.hpp"

#include <stdexcept>

namespace rota {

void LatticeSequence::validate() const
{
    if (values.empty())
        throw std::invalid_argument("lattice sequence needs at least u_0");
    if (h <= 0)
        throw std::invalid_argument("mesh spacing h must be positive");
}

namespace {

Rational rational_pow(const Rational& x, long e)
{
    Rational acc = 1;
    for (long i = 0; i < e; ++i)
        acc *= x;
    return acc;
}

// t-th moment sum_k k^t alpha_k of the stencil weights
Rational stencil_moment(const DeltaOperatorSpec& spec, long t)
{
    Rational acc = 0;
    for (const auto& [k, w] : spec.alpha)
        acc += Rational(rational_pow(Rational(k), t)) * w;
    return acc;
}

} // namespace

Rational lower_factorial(long k, long n, const Rational& h)
{
    if (k < 0 || n < 0)
        throw std::invalid_argument("lower_factorial indices must be nonnegative");
    if (n < k)
        return 0;
    return falling_factorial(n, k) * rational_pow(h, k);
}

LatticeSequence forward_transform(const TaylorSeries& b, long nmax, const Rational& h)
{
    if (nmax < 0)
        throw std::invalid_argument("nmax must be nonnegative");
    if (b.order() < nmax)
        throw std::invalid_argument("series truncation order below nmax");
    if (h <= 0)
        throw std::invalid_argument("mesh spacing h must be positive");
    LatticeSequence u;
    u.h = h;
    u.values.reserve(static_cast<std::size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n) {
        Rational acc = 0;
        for (long k = 0; k <= n; ++k)
            acc += b[k] * lower_factorial(k, n, h);
        u.values.push_back(acc);
    }
    return u;
}

TaylorSeries inverse_transform(const LatticeSequence& u)
{
    u.validate();
    TaylorSeries b = TaylorSeries::zero(u.nmax());
    Rational hk = 1; // h^k
    for (long k = 0; k <= u.nmax(); ++k) {
        Rational acc = 0;
        for (long j = 0; j <= k; ++j) {
            const Rational term = rfact(j) * rfact(k - j) * u[j];
            acc += ((k - j) % 2 == 0) ? term : -term;
        }
        b[k] = acc / hk;
        hk *= u.h;
    }
    return b;
}

TaylorSeries star_product(const TaylorSeries& f, const TaylorSeries& g)
{
    // in the p-basis the star product is plain coefficient convolution
    return series_mul(f, g);
}

Rational delta_power_at(const LatticeSequence& u, long i, long n)
{
    if (i < 0)
        throw std::invalid_argument("difference power must be nonnegative");
    if (n < 0 || n + i > u.nmax())
        throw std::invalid_argument("difference window exceeds available lattice values");
    Rational acc = 0;
    for (long k = 0; k <= i; ++k) {
        const Rational term = binomial(i, k) * u[n + k];
        acc += ((i - k) % 2 == 0) ? term : -term;
    }
    return acc / rational_pow(u.h, i);
}

LatticeSequence delta_power(const LatticeSequence& u, long i)
{
    u.validate();
    if (i > u.nmax())
        throw std::invalid_argument("difference window exceeds available lattice values");
    LatticeSequence out;
    out.h = u.h;
    for (long n = 0; n + i <= u.nmax(); ++n)
        out.values.push_back(delta_power_at(u, i, n));
    return out;
}

long validate_delta_operator(const DeltaOperatorSpec& spec)
{
    if (spec.sigma <= 0)
        throw std::invalid_argument("sigma must be positive");
    if (spec.alpha.size() < 2)
        throw std::invalid_argument("stencil needs at least two offsets (l < m)");
    if (spec.alpha.begin()->second == 0 || spec.alpha.rbegin()->second == 0)
        throw std::invalid_argument("endpoint weights alpha_l, alpha_m must be nonzero");

    const Rational m0 = stencil_moment(spec, 0);
    if (m0 != 0)
        throw std::invalid_argument("constraint violated: sum alpha_k = " + to_string(m0) + " != 0");
    const Rational m1 = stencil_moment(spec, 1);
    if (m1 != 1)
        throw std::invalid_argument("constraint violated: sum k*alpha_k = " + to_string(m1) + " != 1");

    // (1/sigma) sum_k alpha_k (x+k sigma)^m
    //   = m x^{m-1} + sum_{t>=2} C(m,t) M_t sigma^{t-1} x^{m-t},
    // so the order is (first nonzero moment beyond t=1) - 1. A stencil
    // on P points cannot annihilate all moments up to 2P.
    const long t_top = 2 * static_cast<long>(spec.alpha.size()) + 2;
    for (long t = 2; t <= t_top; ++t)
        if (stencil_moment(spec, t) != 0)
            return t - 1;
    throw std::logic_error("no nonzero stencil moment found");
}

std::vector<BasicPolynomial> basic_polynomials(const DeltaOperatorSpec& spec, long kmax)
{
    validate_delta_operator(spec);
    if (kmax < 0)
        throw std::invalid_argument("kmax must be nonnegative");

    // Q x^j = sum_{t<j} C(j,t) M_{j-t} sigma^{j-t-1} x^t
    std::vector<Rational> moments(static_cast<std::size_t>(kmax) + 1);
    for (long t = 0; t <= kmax; ++t)
        moments[static_cast<std::size_t>(t)] = stencil_moment(spec, t);

    std::vector<BasicPolynomial> out;
    out.push_back(BasicPolynomial{0, {Rational(1)}});
    for (long n = 1; n <= kmax; ++n) {
        const auto& prev = out.back();
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
        c[static_cast<std::size_t>(n)] = 1; // monic, forced by M_1 = 1
        for (long t = n - 2; t >= 0; --t) {
            // match coefficient of x^t in Q p_n = n p_{n-1}
            Rational acc = 0;
            for (long j = t + 2; j <= n; ++j)
                acc += c[static_cast<std::size_t>(j)] * binomial(j, t)
                     * moments[static_cast<std::size_t>(j - t)]
                     * rational_pow(spec.sigma, j - t - 1);
            const Rational target = Rational(n) * prev.coeffs[static_cast<std::size_t>(t)];
            c[static_cast<std::size_t>(t + 1)] = (target - acc) / Rational(t + 1);
        }
        out.push_back(BasicPolynomial{n, std::move(c)});
    }
    return out;
}

Rational eval_polynomial(const BasicPolynomial& p, const Rational& x)
{
    Rational acc = 0;
    for (long k = p.degree; k >= 0; --k)
        acc = Rational(acc * x) + p.coeffs[static_cast<std::size_t>(k)];
    return acc;
}

} // namespace rota
