#include "rota/galois.hpp"

#include "rota/discretize.hpp"

#include <stdexcept>

namespace rota {

namespace {

// Leibniz expansion over permutations; N is small (fundamental systems
// at desk scale), so no LU-style elimination is needed.
TaylorSeries star_determinant(const std::vector<std::vector<TaylorSeries>>& m)
{
    const long n = static_cast<long>(m.size());
    const long k_top = m.front().front().order();

    std::vector<long> perm(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;

    TaylorSeries det = TaylorSeries::zero(k_top);
    bool even = true;
    // iterate permutations in lexicographic order, tracking parity
    while (true) {
        TaylorSeries prod = TaylorSeries::monomial(0, k_top);
        for (long i = 0; i < n; ++i)
            prod = star_product(prod, m[static_cast<std::size_t>(i)]
                                       [static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
        det = series_add(det, even ? prod : series_scale(-1, prod));

        // next_permutation with parity bookkeeping: count the swaps
        long i = n - 2;
        while (i >= 0 && perm[static_cast<std::size_t>(i)] >= perm[static_cast<std::size_t>(i + 1)])
            --i;
        if (i < 0)
            break;
        long j = n - 1;
        while (perm[static_cast<std::size_t>(j)] <= perm[static_cast<std::size_t>(i)])
            --j;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
        even = !even;
        for (long lo = i + 1, hi = n - 1; lo < hi; ++lo, --hi) {
            std::swap(perm[static_cast<std::size_t>(lo)], perm[static_cast<std::size_t>(hi)]);
            even = !even;
        }
    }
    return det;
}

} // namespace

TaylorSeries star_wronskian(const std::vector<TaylorSeries>& solutions)
{
    if (solutions.empty())
        throw std::invalid_argument("star_wronskian needs at least one solution");
    const long n = static_cast<long>(solutions.size());
    const long k_top = solutions.front().order();
    for (const auto& s : solutions)
        if (s.order() != k_top)
            throw std::invalid_argument("solutions must share one truncation order");
    if (k_top + 1 < n)
        throw std::invalid_argument("truncation too small to form the difference rows");

    std::vector<std::vector<TaylorSeries>> rows;
    std::vector<TaylorSeries> current = solutions;
    for (long i = 0; i < n; ++i) {
        rows.push_back(current);
        for (auto& c : current)
            c = series_derivative(c); // the delta operator on p-basis coefficients
    }
    return star_determinant(rows);
}

FundamentalVerdict is_fundamental_system(const LinearODESpec& ode,
                                         const std::vector<TaylorSeries>& solutions,
                                         long nmax)
{
    ode.validate();
    if (!ode.constant_coefficients())
        throw std::invalid_argument("fundamental-system check requires constant coefficients");
    for (const auto& c : ode.c0.coeffs())
        if (c != 0)
            throw std::invalid_argument("fundamental-system check requires a homogeneous equation");
    if (static_cast<long>(solutions.size()) != ode.order_n)
        throw std::invalid_argument("need exactly N candidate solutions");
    if (nmax < ode.order_n)
        throw std::invalid_argument("nmax too small for the residual stencil");

    FundamentalVerdict verdict;
    for (std::size_t idx = 0; idx < solutions.size(); ++idx) {
        const LatticeSequence u = forward_transform(solutions[idx], nmax, 1);
        for (long n = 0; n + ode.order_n <= nmax; ++n)
            if (linear_residual(ode, u, n) != 0) {
                verdict.failed_residuals.push_back(static_cast<long>(idx));
                break;
            }
    }
    if (!verdict.failed_residuals.empty())
        return verdict;

    const TaylorSeries w = star_wronskian(solutions);
    verdict.witness = w[0];
    verdict.fundamental = (w[0] != 0);
    return verdict;
}

} // namespace rota
