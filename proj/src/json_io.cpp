#include "rota/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rota {

using nlohmann::json;

json rational_to_json(const Rational& r)
{
    return to_string(r);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        throw std::invalid_argument("rational values must be \"p/q\" strings");
    return parse_rational(j.get<std::string>());
}

json series_to_json(const TaylorSeries& b)
{
    json arr = json::array();
    for (const auto& c : b.coeffs())
        arr.push_back(rational_to_json(c));
    return arr;
}

TaylorSeries series_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("series must be a nonempty array of rationals");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j)
        coeffs.push_back(rational_from_json(c));
    return TaylorSeries(std::move(coeffs));
}

namespace {

// Coefficient arrays in problem files are exact polynomials; they are
// padded to a common truncation order on ingest.
std::vector<TaylorSeries> read_coefficients(const json& j, std::size_t expected)
{
    if (!j.is_array() || j.size() != expected)
        throw std::invalid_argument("coefficient list \"a\" must hold exactly N+1 series");
    std::size_t longest = 1;
    for (const auto& ai : j) {
        if (!ai.is_array() || ai.empty())
            throw std::invalid_argument("each coefficient series must be a nonempty array");
        longest = std::max(longest, ai.size());
    }
    std::vector<TaylorSeries> out;
    for (const auto& ai : j) {
        std::vector<Rational> coeffs(longest, Rational(0));
        for (std::size_t k = 0; k < ai.size(); ++k)
            coeffs[k] = rational_from_json(ai[k]);
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

TaylorSeries pad_to(const TaylorSeries& f, long k_top)
{
    std::vector<Rational> coeffs = f.coeffs();
    coeffs.resize(static_cast<std::size_t>(k_top) + 1, Rational(0));
    return TaylorSeries(std::move(coeffs));
}

} // namespace

json ode_to_json(const ODESpec& ode)
{
    json out;
    if (std::holds_alternative<LinearODESpec>(ode)) {
        const auto& lin = std::get<LinearODESpec>(ode);
        out["kind"] = "linear";
        out["N"] = lin.order_n;
        out["a"] = json::array();
        for (const auto& ai : lin.a)
            out["a"].push_back(series_to_json(ai));
        out["c0"] = series_to_json(lin.c0);
    } else {
        const auto& nl = std::get<NonlinearODESpec>(ode);
        out["kind"] = "nonlinear";
        out["m"] = nl.deriv_m;
        out["N"] = nl.degree_n;
        out["a"] = json::array();
        for (const auto& ar : nl.a)
            out["a"].push_back(series_to_json(ar));
    }
    return out;
}

ODESpec ode_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("ODE spec must be an object with a \"kind\" field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear") {
        LinearODESpec lin;
        lin.order_n = j.at("N").get<long>();
        if (lin.order_n < 1)
            throw std::invalid_argument("linear ODE order N must be >= 1");
        lin.a = read_coefficients(j.at("a"), static_cast<std::size_t>(lin.order_n) + 1);
        // the shared truncation is the longest array seen, c0 included
        if (j.contains("c0")) {
            lin.c0 = series_from_json(j.at("c0"));
            const long k_top = std::max(lin.c0.order(), lin.a.front().order());
            lin.c0 = pad_to(lin.c0, k_top);
            for (auto& ai : lin.a)
                ai = pad_to(ai, k_top);
        } else {
            lin.c0 = TaylorSeries::zero(lin.a.front().order());
        }
        lin.validate();
        return lin;
    }
    if (kind == "nonlinear") {
        NonlinearODESpec nl;
        nl.deriv_m = j.at("m").get<long>();
        nl.degree_n = j.at("N").get<long>();
        if (nl.deriv_m < 1 || nl.degree_n < 1)
            throw std::invalid_argument("nonlinear ODE needs m >= 1 and N >= 1");
        nl.a = read_coefficients(j.at("a"), static_cast<std::size_t>(nl.degree_n) + 1);
        nl.validate();
        return nl;
    }
    throw std::invalid_argument("unknown ODE kind: " + kind);
}

json delta_operator_to_json(const DeltaOperatorSpec& spec)
{
    json out;
    out["sigma"] = rational_to_json(spec.sigma);
    out["alpha"] = json::object();
    for (const auto& [k, w] : spec.alpha)
        out["alpha"][std::to_string(k)] = rational_to_json(w);
    return out;
}

DeltaOperatorSpec delta_operator_from_json(const json& j)
{
    DeltaOperatorSpec spec;
    if (j.contains("sigma"))
        spec.sigma = rational_from_json(j.at("sigma"));
    const auto& alpha = j.at("alpha");
    if (!alpha.is_object() || alpha.empty())
        throw std::invalid_argument("delta operator needs an \"alpha\" offset map");
    for (auto it = alpha.begin(); it != alpha.end(); ++it)
        spec.alpha[std::stol(it.key())] = rational_from_json(it.value());
    return spec;
}

json lattice_to_json(const LatticeSequence& u)
{
    json out;
    out["h"] = rational_to_json(u.h);
    out["u"] = json::array();
    for (const auto& v : u.values)
        out["u"].push_back(rational_to_json(v));
    return out;
}

LatticeSequence lattice_from_json(const json& j)
{
    LatticeSequence u;
    if (j.contains("h"))
        u.h = rational_from_json(j.at("h"));
    for (const auto& v : j.at("u"))
        u.values.push_back(rational_from_json(v));
    u.validate();
    return u;
}

} // namespace rota
