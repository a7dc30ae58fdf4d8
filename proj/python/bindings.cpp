// Python surface of the lattice-discretization library. Rationals
// cross the boundary as "p/q" strings so no exactness is lost; ODE and
// delta-operator specs cross as JSON strings in the same schema the CLI
// reads.

#include "rota/catalog.hpp"
#include "rota/combinatorics.hpp"
#include "rota/discretize.hpp"
#include "rota/galois.hpp"
#include "rota/json_io.hpp"
#include "rota/series.hpp"
#include "rota/umbral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace rota;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

std::vector<std::string> to_strings(const std::vector<Rational>& values)
{
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(to_string(v));
    return out;
}

TaylorSeries to_series(const std::vector<std::string>& coeffs)
{
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs)
        out.push_back(rat(c));
    return TaylorSeries(std::move(out));
}

LatticeSequence to_lattice(const std::vector<std::string>& values, const std::string& h)
{
    LatticeSequence u;
    u.h = rat(h);
    for (const auto& v : values)
        u.values.push_back(rat(v));
    u.validate();
    return u;
}

ODESpec parse_ode(const std::string& text)
{
    return ode_from_json(nlohmann::json::parse(text));
}

} // namespace

PYBIND11_MODULE(_rotadisc, m)
{
    m.doc() = "exact lattice discretization of ODEs with residual certificates";

    // transforms --------------------------------------------------------
    m.def(
        "forward_transform",
        [](const std::vector<std::string>& b, long nmax, const std::string& h) {
            return to_strings(forward_transform(to_series(b), nmax, rat(h)).values);
        },
        py::arg("b"), py::arg("nmax"), py::arg("h") = "1",
        "lattice values u_0..u_nmax of the coefficient vector b");

    m.def(
        "inverse_transform",
        [](const std::vector<std::string>& u, const std::string& h) {
            return to_strings(inverse_transform(to_lattice(u, h)).coeffs());
        },
        py::arg("u"), py::arg("h") = "1", "coefficients recovered from lattice values");

    m.def(
        "star_product",
        [](const std::vector<std::string>& f, const std::vector<std::string>& g) {
            return to_strings(star_product(to_series(f), to_series(g)).coeffs());
        },
        py::arg("f"), py::arg("g"));

    // solvers -----------------------------------------------------------
    m.def(
        "solve_series",
        [](const std::string& ode_json, const std::vector<std::string>& init, long k_top) {
            const ODESpec ode = parse_ode(ode_json);
            std::vector<Rational> init_r;
            for (const auto& v : init)
                init_r.push_back(rat(v));
            if (std::holds_alternative<LinearODESpec>(ode))
                return to_strings(
                    solve_linear_series(std::get<LinearODESpec>(ode), init_r, k_top).coeffs());
            return to_strings(
                solve_nonlinear_series(std::get<NonlinearODESpec>(ode), init_r, k_top)
                    .coeffs());
        },
        py::arg("ode_json"), py::arg("init"), py::arg("k_top"),
        "power-series solution coefficients b_0..b_k_top");

    // residuals ---------------------------------------------------------
    m.def(
        "residual",
        [](const std::string& ode_json, const std::vector<std::string>& u,
           const std::string& h, long n) {
            const ODESpec ode = parse_ode(ode_json);
            const LatticeSequence lattice = to_lattice(u, h);
            if (std::holds_alternative<LinearODESpec>(ode))
                return to_string(linear_residual(std::get<LinearODESpec>(ode), lattice, n));
            return to_string(nonlinear_residual(std::get<NonlinearODESpec>(ode), lattice, n));
        },
        py::arg("ode_json"), py::arg("u"), py::arg("h"), py::arg("n"),
        "exact residual of the difference equation at site n");

    m.def(
        "power_image",
        [](const std::vector<std::string>& u, long r, long n, const std::string& h) {
            return to_string(power_image(to_lattice(u, h), r, n));
        },
        py::arg("u"), py::arg("r"), py::arg("n"), py::arg("h") = "1");

    // special values ------------------------------------------------------
    m.def(
        "gauss_sum",
        [](const std::string& a, const std::string& b, const std::string& c, long n) {
            return to_string(gauss_sum(rat(a), rat(b), rat(c), n));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("n"));

    m.def(
        "discrete_jacobi",
        [](long m_deg, const std::string& alpha, const std::string& beta, long n) {
            return to_string(discrete_jacobi(m_deg, rat(alpha), rat(beta), n));
        },
        py::arg("m"), py::arg("alpha"), py::arg("beta"), py::arg("n"));

    // independence --------------------------------------------------------
    m.def(
        "star_wronskian",
        [](const std::vector<std::vector<std::string>>& solutions) {
            std::vector<TaylorSeries> rows;
            for (const auto& s : solutions)
                rows.push_back(to_series(s));
            return to_strings(star_wronskian(rows).coeffs());
        },
        py::arg("solutions"));

    m.def(
        "is_fundamental_system",
        [](const std::string& ode_json, const std::vector<std::vector<std::string>>& solutions,
           long nmax) {
            const ODESpec ode = parse_ode(ode_json);
            if (!std::holds_alternative<LinearODESpec>(ode))
                throw std::invalid_argument("fundamental systems need a linear ODE");
            std::vector<TaylorSeries> candidates;
            for (const auto& s : solutions)
                candidates.push_back(to_series(s));
            const FundamentalVerdict verdict =
                is_fundamental_system(std::get<LinearODESpec>(ode), candidates, nmax);
            py::dict out;
            out["fundamental"] = verdict.fundamental;
            out["witness"] = to_string(verdict.witness);
            out["failed_residuals"] = verdict.failed_residuals;
            return out;
        },
        py::arg("ode_json"), py::arg("solutions"), py::arg("nmax"));

    // catalog -------------------------------------------------------------
    m.def("catalog_names", [] { return catalog_names(); });

    m.def(
        "build_example",
        [](const std::string& name, const std::map<std::string, std::string>& params) {
            Params p;
            for (const auto& [key, value] : params)
                p[key] = rat(value);
            const CatalogEntry entry = build_example(name, p);
            py::dict out;
            out["name"] = entry.name;
            out["certified_through"] = entry.certified_through;
            out["solution"] = to_strings(entry.solution.coeffs());
            const ODESpec ode = entry.is_linear()
                                    ? ODESpec(std::get<LinearODESpec>(entry.problem))
                                    : ODESpec(std::get<NonlinearODESpec>(entry.problem));
            out["ode_json"] = ode_to_json(ode).dump();
            py::dict params_out;
            for (const auto& [key, value] : entry.params)
                params_out[py::str(key)] = to_string(value);
            out["params"] = params_out;
            return out;
        },
        py::arg("name"), py::arg("params") = std::map<std::string, std::string>{});

    // difference operators --------------------------------------------------
    m.def(
        "validate_delta_operator",
        [](const std::string& spec_json) {
            return validate_delta_operator(
                delta_operator_from_json(nlohmann::json::parse(spec_json)));
        },
        py::arg("spec_json"),
        "checks the stencil constraints, returns the approximation order");

    m.def(
        "basic_polynomials",
        [](const std::string& spec_json, long kmax) {
            const auto polys = basic_polynomials(
                delta_operator_from_json(nlohmann::json::parse(spec_json)), kmax);
            std::vector<std::vector<std::string>> out;
            for (const auto& p : polys)
                out.push_back(to_strings(p.coeffs));
            return out;
        },
        py::arg("spec_json"), py::arg("kmax"),
        "monomial coefficients of p_0..p_kmax for the operator");
}
