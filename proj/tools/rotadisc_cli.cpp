// rotadisc: exact-arithmetic discretization of ODEs on a uniform
// lattice, with residual certificates. JSON in, JSON or plain table
// out. Exit codes: 0 success/verified, 1 verification failure,
// 2 parse error, 3 validation error.

#include "rota/catalog.hpp"
#include "rota/combinatorics.hpp"
#include "rota/discretize.hpp"
#include "rota/galois.hpp"
#include "rota/json_io.hpp"
#include "rota/series.hpp"
#include "rota/umbral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace rota;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitValidationError = 3;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational parse_cli_rational(const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad rational '") + text + "': " + e.what());
    }
}

Params parse_params(const std::string& text)
{
    Params out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("parameters must be key=value pairs: " + item);
        out[item.substr(0, eq)] = parse_cli_rational(item.substr(eq + 1));
    }
    return out;
}

void emit(const std::string& report, const std::string& output_path)
{
    if (output_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw ValidationError("cannot open output file: " + output_path);
    out << report;
}

// ---- shared report pieces -------------------------------------------------

long stencil_width(const ODESpec& ode)
{
    if (std::holds_alternative<LinearODESpec>(ode))
        return std::get<LinearODESpec>(ode).order_n;
    return std::get<NonlinearODESpec>(ode).deriv_m;
}

Rational residual_at(const ODESpec& ode, const LatticeSequence& u, long n)
{
    if (std::holds_alternative<LinearODESpec>(ode))
        return linear_residual(std::get<LinearODESpec>(ode), u, n);
    return nonlinear_residual(std::get<NonlinearODESpec>(ode), u, n);
}

struct SweepResult {
    json records = json::array();
    Rational max_abs = 0;
    long verified_through = -1; // last site before the first failure
    long first_failure = -1;
};

SweepResult residual_sweep(const ODESpec& ode, const LatticeSequence& u, long n_top)
{
    SweepResult sweep;
    for (long n = 0; n <= n_top; ++n) {
        const Rational r = residual_at(ode, u, n);
        sweep.records.push_back({{"n", n}, {"residual", rational_to_json(r)}});
        const Rational mag = r < 0 ? Rational(-r) : r;
        if (mag > sweep.max_abs)
            sweep.max_abs = mag;
        if (r != 0 && sweep.first_failure < 0)
            sweep.first_failure = n;
        if (sweep.first_failure < 0)
            sweep.verified_through = n;
    }
    return sweep;
}

json sweep_summary(const SweepResult& sweep)
{
    return {{"max_abs_residual", rational_to_json(sweep.max_abs)},
            {"verified_through", sweep.verified_through}};
}

std::string render_sweep_table(const SweepResult& sweep)
{
    std::ostringstream out;
    out << "   n  residual\n";
    for (const auto& rec : sweep.records)
        out << std::setw(4) << rec.at("n").get<long>() << "  "
            << rec.at("residual").get<std::string>() << "\n";
    out << "max |residual| = " << to_string(sweep.max_abs)
        << ", verified through n = " << sweep.verified_through << "\n";
    return out.str();
}

// Difference-equation description of the discretized ODE. Linear terms
// are coefficients of n! h^k/(n-k)! (Delta^i u)_{n-k}; the nonlinear
// form lists the binomial window against the per-power coefficient
// series.
json stencil_description(const ODESpec& ode)
{
    json out;
    if (std::holds_alternative<LinearODESpec>(ode)) {
        const auto& lin = std::get<LinearODESpec>(ode);
        out["kind"] = "linear";
        out["term_form"] = "coeff * n! h^k / (n-k)! * (Delta^i u)_{n-k}";
        json terms = json::array();
        for (long i = 0; i <= lin.order_n; ++i)
            for (long k = 0; k <= lin.a[static_cast<std::size_t>(i)].order(); ++k) {
                const Rational c =
                    Rational(factorial(k)) * lin.a[static_cast<std::size_t>(i)][k];
                if (c != 0)
                    terms.push_back(
                        {{"deriv", i}, {"power", k}, {"coeff", rational_to_json(c)}});
            }
        out["terms"] = terms;
        json inhom = json::array();
        for (long s = 0; s <= lin.c0.order(); ++s) {
            const Rational g = lin.c0[s];
            if (g != 0)
                inhom.push_back({{"power", s}, {"coeff", rational_to_json(g)}});
        }
        out["inhomogeneity_form"] = "coeff * n! h^s / (n-s)!";
        out["inhomogeneity"] = inhom;
    } else {
        const auto& nl = std::get<NonlinearODESpec>(ode);
        out["kind"] = "nonlinear";
        out["window_form"] = "sum_i weight_i u_{n+i} = h^m sum_r image(a_r(x) y^r)";
        json window = json::array();
        for (long i = 0; i <= nl.deriv_m; ++i) {
            const Rational w = ((nl.deriv_m - i) % 2 == 0 ? Rational(1) : Rational(-1))
                               * binomial(nl.deriv_m, i);
            window.push_back({{"offset", i}, {"weight", rational_to_json(w)}});
        }
        out["window"] = window;
        json powers = json::array();
        for (long r = 0; r <= nl.degree_n; ++r)
            powers.push_back({{"r", r}, {"a", series_to_json(nl.a[static_cast<std::size_t>(r)])}});
        out["powers"] = powers;
    }
    return out;
}

std::string render_stencil_table(const json& stencil)
{
    std::ostringstream out;
    if (stencil.at("kind") == "linear") {
        out << "difference-equation terms (" << stencil.at("term_form").get<std::string>()
            << "):\n";
        for (const auto& t : stencil.at("terms"))
            out << "  i=" << t.at("deriv").get<long>() << " k=" << t.at("power").get<long>()
                << "  coeff " << t.at("coeff").get<std::string>() << "\n";
        if (!stencil.at("inhomogeneity").empty()) {
            out << "inhomogeneity (" << stencil.at("inhomogeneity_form").get<std::string>()
                << "):\n";
            for (const auto& t : stencil.at("inhomogeneity"))
                out << "  s=" << t.at("power").get<long>() << "  coeff "
                    << t.at("coeff").get<std::string>() << "\n";
        }
    } else {
        out << "window (" << stencil.at("window_form").get<std::string>() << "):\n";
        for (const auto& w : stencil.at("window"))
            out << "  offset " << w.at("offset").get<long>() << "  weight "
                << w.at("weight").get<std::string>() << "\n";
        out << "right-hand-side powers:\n";
        for (const auto& p : stencil.at("powers")) {
            out << "  r=" << p.at("r").get<long>() << "  a = [";
            bool first = true;
            for (const auto& c : p.at("a")) {
                if (!first)
                    out << ", ";
                out << c.get<std::string>();
                first = false;
            }
            out << "]\n";
        }
    }
    return out.str();
}

// ---- input ingestion ------------------------------------------------------

struct Problem {
    ODESpec ode;
    std::optional<TaylorSeries> b;
    std::optional<LatticeSequence> u;
    Rational h = 1;
};

Problem read_problem(const json& j)
{
    if (!j.is_object() || !j.contains("ode"))
        throw ParseError("input must be an object with an \"ode\" field");
    Problem p;
    try {
        p.ode = ode_from_json(j.at("ode"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ODE spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("bad ODE spec: ") + e.what());
    }
    try {
        if (j.contains("h"))
            p.h = rational_from_json(j.at("h"));
        if (j.contains("b"))
            p.b = series_from_json(j.at("b"));
        if (j.contains("u")) {
            p.u = lattice_from_json({{"h", rational_to_json(p.h)}, {"u", j.at("u")}});
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad input: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad input: ") + e.what());
    }
    if (p.h <= 0)
        throw ValidationError("mesh spacing h must be positive");
    return p;
}

// Lattice for the sweep: an explicit "u" wins, otherwise the transform
// of "b" as far as the truncation supports.
LatticeSequence problem_lattice(const Problem& p, long n_top_wanted, long width)
{
    if (p.u)
        return *p.u;
    if (!p.b)
        throw ValidationError("input needs either \"b\" (series coefficients) or \"u\"");
    const long n_top = std::min(n_top_wanted + width, p.b->order());
    return forward_transform(*p.b, n_top, p.h);
}

// ---- commands -------------------------------------------------------------

struct CommonFlags {
    std::string input_path;
    std::string output_path;
    std::string format = "json";
    long n_max = 20;
    std::string h_text;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_input)
{
    cmd->set_help_flag("--help", "print help"); // frees -h for the mesh flag
    auto* opt = cmd->add_option("--input", flags.input_path, "problem JSON file");
    if (needs_input)
        opt->required();
    cmd->add_option("--n-max", flags.n_max, "sweep limit")->check(CLI::NonNegativeNumber);
    cmd->add_option("--h", flags.h_text, "mesh spacing as p/q (overrides the input file)");
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--output", flags.output_path, "write the report to a file");
}

Problem load_problem(const CommonFlags& flags)
{
    Problem p = read_problem(load_input(flags.input_path));
    if (!flags.h_text.empty()) {
        p.h = parse_cli_rational(flags.h_text);
        if (p.h <= 0)
            throw ValidationError("mesh spacing h must be positive");
        if (p.u)
            p.u->h = p.h;
    }
    return p;
}

int run_discretize(const CommonFlags& flags)
{
    const Problem p = load_problem(flags);
    const long width = stencil_width(p.ode);
    const LatticeSequence u = problem_lattice(p, flags.n_max, width);
    const long n_show = std::min(flags.n_max, u.nmax());

    json report;
    report["h"] = rational_to_json(u.h);
    report["stencil"] = stencil_description(p.ode);
    json uvals = json::array();
    for (long n = 0; n <= n_show; ++n)
        uvals.push_back(rational_to_json(u[n]));
    report["u"] = uvals;

    if (flags.format == "json") {
        emit(report.dump(2) + "\n", flags.output_path);
    } else {
        std::ostringstream out;
        out << render_stencil_table(report["stencil"]);
        out << "lattice prefix (h = " << to_string(u.h) << "):\n";
        for (long n = 0; n <= n_show; ++n)
            out << "  u_" << n << " = " << to_string(u[n]) << "\n";
        emit(out.str(), flags.output_path);
    }
    return 0;
}

int run_verify(const CommonFlags& flags)
{
    const Problem p = load_problem(flags);
    const long width = stencil_width(p.ode);
    const LatticeSequence u = problem_lattice(p, flags.n_max, width);
    const long n_top = std::min(flags.n_max, u.nmax() - width);
    if (n_top < 0)
        throw ValidationError("lattice too short for the stencil width");

    const SweepResult sweep = residual_sweep(p.ode, u, n_top);
    json report;
    report["h"] = rational_to_json(u.h);
    report["residuals"] = sweep.records;
    report["summary"] = sweep_summary(sweep);

    if (flags.format == "json")
        emit(report.dump(2) + "\n", flags.output_path);
    else
        emit(render_sweep_table(sweep), flags.output_path);

    if (sweep.first_failure >= 0) {
        std::cerr << "verification failed: first nonzero residual at n = "
                  << sweep.first_failure << "\n";
        return kExitVerificationFailure;
    }
    return 0;
}

int run_limit(const std::string& name, const std::string& params_text,
              const std::string& x_star_text, const std::string& hs_text,
              const CommonFlags& flags)
{
    const Params params = parse_params(params_text);
    const Rational x_star = parse_cli_rational(x_star_text);
    std::vector<Rational> hs;
    std::stringstream ss(hs_text);
    std::string item;
    while (std::getline(ss, item, ','))
        hs.push_back(parse_cli_rational(item));

    CatalogEntry entry = [&] {
        try {
            return build_example(name, params);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    }();
    const LimitTable table = [&] {
        try {
            return continuum_limit_study(entry, hs, x_star);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    }();

    json report;
    report["entry"] = entry.name;
    report["x_star"] = rational_to_json(table.x_star);
    report["exact_value"] = rational_to_json(table.exact_value);
    json rows = json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"h", rational_to_json(row.h)},
                        {"n", row.n},
                        {"lattice_value", rational_to_json(row.lattice_value)},
                        {"error_float", row.error}});
    report["rows"] = rows;
    report["error_ratios_float"] = table.ratios;

    if (flags.format == "json") {
        emit(report.dump(2) + "\n", flags.output_path);
    } else {
        std::ostringstream out;
        out << "entry " << entry.name << ", x* = " << to_string(table.x_star)
            << ", series value " << to_string(table.exact_value) << "\n";
        out << "       h      n  lattice value        error (float)\n";
        for (const auto& row : table.rows)
            out << std::setw(8) << to_string(row.h) << "  " << std::setw(5) << row.n << "  "
                << std::setw(18) << to_string(row.lattice_value) << "  " << row.error << "\n";
        out << "error ratios:";
        for (double r : table.ratios)
            out << " " << r;
        out << "\n";
        emit(out.str(), flags.output_path);
    }
    return 0;
}

int run_identities(long max_range, const CommonFlags& flags)
{
    // Full default ranges; --max caps every dimension.
    const auto cap = [max_range](long dflt) { return std::min(dflt, max_range); };
    long checked = 0;
    long failures = 0;
    json first_failure;

    const auto record = [&](const char* family, const RationalPair& pair, json where) {
        ++checked;
        if (pair.first != pair.second) {
            ++failures;
            if (first_failure.is_null()) {
                where["family"] = family;
                where["lhs"] = rational_to_json(pair.first);
                where["rhs"] = rational_to_json(pair.second);
                first_failure = where;
            }
        }
    };

    for (long n = 0; n <= cap(40); ++n)
        record("alternating", identity_alternating(n), {{"n", n}});
    for (long s = 0; s <= cap(15); ++s)
        for (long m = 0; m <= cap(15); ++m)
            for (long r = 0; r <= cap(15); ++r)
                record("vandermonde", identity_vandermonde(s, m, r),
                       {{"s", s}, {"m", m}, {"r", r}});
    for (long s = 0; s <= cap(6); ++s)
        for (long n = 0; n <= cap(20); ++n)
            for (long m = 0; m <= n; ++m)
                record("delt", identity_delt(s, n, m), {{"s", s}, {"n", n}, {"m", m}});
    for (long s = 0; s <= cap(4); ++s)
        for (long n = 0; n <= cap(15); ++n)
            for (long r = 0; r <= n; ++r)
                for (long j = 0; j <= n + s - r; ++j)
                    record("key", identity_key(n, r, s, j),
                           {{"n", n}, {"r", r}, {"s", s}, {"j", j}});

    json report;
    report["checked"] = checked;
    report["failures"] = failures;
    if (!first_failure.is_null())
        report["first_failure"] = first_failure;

    if (flags.format == "json") {
        emit(report.dump(2) + "\n", flags.output_path);
    } else {
        std::ostringstream out;
        out << "identity pairs checked: " << checked << ", failures: " << failures << "\n";
        emit(out.str(), flags.output_path);
    }
    if (failures > 0) {
        std::cerr << "identity sweep failed " << failures << " of " << checked << " pairs\n";
        return kExitVerificationFailure;
    }
    return 0;
}

int run_catalog(const std::string& name, const std::string& params_text,
                const CommonFlags& flags)
{
    if (name.empty()) {
        json report;
        report["entries"] = catalog_names();
        if (flags.format == "json") {
            emit(report.dump(2) + "\n", flags.output_path);
        } else {
            std::ostringstream out;
            for (const auto& entry : catalog_names())
                out << entry << "\n";
            emit(out.str(), flags.output_path);
        }
        return 0;
    }

    const CatalogEntry entry = [&] {
        try {
            return build_example(name, parse_params(params_text));
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    }();

    const long width = entry.stencil_width();
    const long n_top = std::min(flags.n_max, entry.certified_through);
    const LatticeSequence u = forward_transform(entry.solution, n_top + width, 1);
    const ODESpec ode = entry.is_linear()
                            ? ODESpec(std::get<LinearODESpec>(entry.problem))
                            : ODESpec(std::get<NonlinearODESpec>(entry.problem));
    const SweepResult sweep = residual_sweep(ode, u, n_top);

    json report;
    report["name"] = entry.name;
    json params = json::object();
    for (const auto& [key, value] : entry.params)
        params[key] = rational_to_json(value);
    report["params"] = params;
    report["certified_through"] = entry.certified_through;
    json prefix = json::array();
    for (long k = 0; k <= std::min<long>(entry.solution.order(), n_top); ++k)
        prefix.push_back(rational_to_json(entry.solution[k]));
    report["solution_prefix"] = prefix;
    report["stencil"] = stencil_description(ode);
    report["residuals"] = sweep.records;
    report["summary"] = sweep_summary(sweep);

    if (flags.format == "json") {
        emit(report.dump(2) + "\n", flags.output_path);
    } else {
        std::ostringstream out;
        out << "entry " << entry.name << " (certified through n = "
            << entry.certified_through << ")\n";
        out << render_stencil_table(report["stencil"]);
        out << render_sweep_table(sweep);
        emit(out.str(), flags.output_path);
    }
    return sweep.first_failure >= 0 ? kExitVerificationFailure : 0;
}

int run_fundamental(const CommonFlags& flags)
{
    const json j = load_input(flags.input_path);
    if (!j.is_object() || !j.contains("ode") || !j.contains("solutions"))
        throw ParseError("input must hold \"ode\" and \"solutions\"");
    LinearODESpec ode;
    try {
        const ODESpec spec = ode_from_json(j.at("ode"));
        if (!std::holds_alternative<LinearODESpec>(spec))
            throw ValidationError("fundamental systems are defined for linear ODEs");
        ode = std::get<LinearODESpec>(spec);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ODE spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("bad ODE spec: ") + e.what());
    }
    std::vector<TaylorSeries> solutions;
    try {
        for (const auto& s : j.at("solutions"))
            solutions.push_back(series_from_json(s));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad solutions: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad solutions: ") + e.what());
    }

    const FundamentalVerdict verdict = [&] {
        try {
            return is_fundamental_system(ode, solutions, flags.n_max);
        } catch (const std::invalid_argument& e) {
            throw ValidationError(e.what());
        }
    }();

    json report;
    report["fundamental"] = verdict.fundamental;
    report["witness"] = rational_to_json(verdict.witness);
    report["failed_residuals"] = verdict.failed_residuals;

    if (flags.format == "json") {
        emit(report.dump(2) + "\n", flags.output_path);
    } else {
        std::ostringstream out;
        out << (verdict.fundamental ? "fundamental" : "not fundamental")
            << ", witness = " << to_string(verdict.witness) << "\n";
        if (!verdict.failed_residuals.empty()) {
            out << "candidates failing the residual certificate:";
            for (long idx : verdict.failed_residuals)
                out << " " << idx;
            out << "\n";
        }
        emit(out.str(), flags.output_path);
    }
    return verdict.fundamental ? 0 : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact lattice discretization and residual certificates"};
    app.require_subcommand(1);

    CommonFlags discretize_flags, verify_flags, limit_flags, identities_flags,
        catalog_flags, fundamental_flags;

    auto* discretize_cmd =
        app.add_subcommand("discretize", "emit the difference equation and lattice prefix");
    add_common(discretize_cmd, discretize_flags, true);

    auto* verify_cmd = app.add_subcommand("verify", "exact residual sweep");
    add_common(verify_cmd, verify_flags, true);

    std::string limit_name, limit_params, limit_x_star = "1";
    std::string limit_hs = "1,1/2,1/4,1/8";
    auto* limit_cmd = app.add_subcommand("limit", "continuum-limit convergence study");
    limit_cmd->add_option("name", limit_name, "catalog entry name")->required();
    limit_cmd->add_option("--params", limit_params, "entry parameters k=v,...");
    limit_cmd->add_option("--x-star", limit_x_star, "fixed point x = n h");
    limit_cmd->add_option("--hs", limit_hs, "comma-separated mesh spacings");
    add_common(limit_cmd, limit_flags, false);

    long identities_max = 1000;
    auto* identities_cmd = app.add_subcommand("identities", "combinatorial identity sweep");
    identities_cmd->add_option("--max", identities_max, "cap every sweep dimension")
        ->check(CLI::NonNegativeNumber);
    add_common(identities_cmd, identities_flags, false);

    std::string catalog_name, catalog_params;
    auto* catalog_cmd = app.add_subcommand("catalog", "run a named worked example");
    catalog_cmd->add_option("name", catalog_name, "entry name (omit to list)");
    catalog_cmd->add_option("--params", catalog_params, "entry parameters k=v,...");
    add_common(catalog_cmd, catalog_flags, false);

    auto* fundamental_cmd =
        app.add_subcommand("fundamental", "decide whether candidates form a fundamental system");
    add_common(fundamental_cmd, fundamental_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitParseError;
    }

    try {
        if (discretize_cmd->parsed())
            return run_discretize(discretize_flags);
        if (verify_cmd->parsed())
            return run_verify(verify_flags);
        if (limit_cmd->parsed())
            return run_limit(limit_name, limit_params, limit_x_star, limit_hs, limit_flags);
        if (identities_cmd->parsed())
            return run_identities(identities_max, identities_flags);
        if (catalog_cmd->parsed())
            return run_catalog(catalog_name, catalog_params, catalog_flags);
        if (fundamental_cmd->parsed())
            return run_fundamental(fundamental_flags);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationError;
    }
    return 0;
}
