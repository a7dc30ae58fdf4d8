#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rota {

// Exact arbitrary-precision arithmetic. Every scalar in the core is a
// Rational; floating point appears only at reporting boundaries.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r)
{
    Integer num = numerator(r);
    Integer den = denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
// or zero denominator.
inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator in rational literal: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

} // namespace rota
