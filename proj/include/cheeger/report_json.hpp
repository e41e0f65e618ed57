#pragma once

#include <json.hpp>

#include "cheeger/koch.hpp"
#include "cheeger/solver.hpp"

namespace cheeger {

nlohmann::json to_json(const Bracket& b);
nlohmann::json to_json(const NeckCheck& n);
nlohmann::json to_json(const CheegerConfig& c);
/// Stable key names: tool, version, h, r, bracket, residual, retract_area,
/// neck_check, method, steiner_check, area_lower_bound_ok, config, ...
nlohmann::json to_json(const CheegerReport& r);
nlohmann::json to_json(const KochSolution& s);

}  // namespace cheeger
