#include "rota/combinatorics.hpp"

#include <stdexcept>

namespace rota {

Integer factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative integer");
    Integer acc = 1;
    for (long i = 2; i <= n; ++i)
        acc *= i;
    return acc;
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    // multiply in increasing order so every partial product is an integer
    Integer acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return Rational(acc);
}

Rational binomial(const Rational& a, long k)
{
    if (k < 0)
        return 0;
    Rational acc = 1;
    for (long i = 0; i < k; ++i)
        acc *= a - i;
    return acc / Rational(factorial(k));
}

Rational rfact(long m)
{
    if (m < 0)
        return 0;
    return Rational(Integer(1), factorial(m));
}

Rational falling_factorial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    Integer acc = 1;
    for (long i = 0; i < k; ++i)
        acc *= (n - i);
    return Rational(acc);
}

Rational pochhammer(const Rational& a, long k)
{
    Rational acc = 1;
    for (long i = 0; i < k; ++i)
        acc *= a + i;
    return acc;
}

namespace {
inline Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }
} // namespace

RationalPair identity_alternating(long n)
{
    Rational lhs = 0;
    for (long k = 0; k <= n; ++k)
        lhs += sign(k) * binomial(n, k);
    Rational rhs = (n == 0) ? 1 : 0;
    return {lhs, rhs};
}

RationalPair identity_vandermonde(long s, long m, long r)
{
    Rational lhs = 0;
    for (long k = 0; k <= r; ++k)
        lhs += binomial(s, k) * binomial(m, r - k);
    return {lhs, binomial(m + s, r)};
}

RationalPair identity_delt(long s, long n, long m)
{
    Rational lhs = 0;
    for (long k = 0; k <= s; ++k)
        lhs += sign(s - k) * binomial(s, k) * binomial(n + k, m + s);
    return {lhs, binomial(n, m)};
}

RationalPair identity_key(long n, long r, long s, long j)
{
    Rational lhs = 0;
    for (long k = j; k <= n + s - r; ++k)
        lhs += sign(k - j) * binomial(n - r, k - s) * binomial(k, j);
    Rational rhs = 0;
    for (long i = 0; i <= s; ++i)
        if (n - r + i == j)
            rhs += sign(s - i) * binomial(s, i);
    return {lhs, rhs};
}

} // namespace rota
