#pragma once

#include "rota/series.hpp"
#include "rota/umbral.hpp"

#include <json.hpp>

#include <variant>

namespace rota {

// All rationals cross the JSON boundary as "p/q" strings ("p" when the
// denominator is 1); no floats in problem files.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const TaylorSeries& b);
TaylorSeries series_from_json(const nlohmann::json& j);

// {"kind":"linear","N":...,"a":[[...],...],"c0":[...]} or
// {"kind":"nonlinear","m":...,"N":...,"a":[[...],...]}
using ODESpec = std::variant<LinearODESpec, NonlinearODESpec>;
nlohmann::json ode_to_json(const ODESpec& ode);
ODESpec ode_from_json(const nlohmann::json& j);

// {"sigma":"1","alpha":{"-1":"-1/2","1":"1/2"}}
nlohmann::json delta_operator_to_json(const DeltaOperatorSpec& spec);
DeltaOperatorSpec delta_operator_from_json(const nlohmann::json& j);

nlohmann::json lattice_to_json(const LatticeSequence& u);
LatticeSequence lattice_from_json(const nlohmann::json& j);

} // namespace rota
