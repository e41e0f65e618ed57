#include "cheeger/report_json.hpp"

#include <string>

#include "cheeger/version.hpp"

namespace cheeger {

nlohmann::json to_json(const Bracket& b) { return {{"r_lo", b.r_lo}, {"r_hi", b.r_hi}}; }

nlohmann::json to_json(const NeckCheck& n) {
  nlohmann::json j;
  j["verdict"] = std::string(to_string(n.verdict));
  j["radii"] = n.radii;
  j["components"] = n.components;
  j["components_fine"] = n.components_fine;
  j["offending_radius"] = n.offending_radius ? nlohmann::json(*n.offending_radius) : nlohmann::json(nullptr);
  j["resolutions"] = n.resolutions;
  return j;
}

nlohmann::json to_json(const CheegerConfig& c) {
  nlohmann::json j;
  j["tolerance_r"] = c.tolerance_r ? nlohmann::json(*c.tolerance_r) : nlohmann::json(nullptr);
  j["base_resolution"] = c.base_resolution;
  j["neck_samples"] = c.neck_samples;
  j["max_iterations"] = c.max_iterations;
  j["unsafe_skip_neck_check"] = c.unsafe_skip_neck_check;
  return j;
}

nlohmann::json to_json(const CheegerReport& r) {
  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["h"] = r.h;
  j["r"] = r.r;
  j["bracket"] = to_json(r.bracket);
  j["residual"] = r.residual;
  j["retract_area"] = r.retract_area;
  j["neck_check"] = to_json(r.neck_check);
  j["method"] = std::string(to_string(r.method));
  j["steiner_check"] = {{"cheeger_ratio_error", r.steiner_check.cheeger_ratio_error},
                        {"minkowski_content", r.steiner_check.minkowski_content}};
  j["area_lower_bound_ok"] = r.area_lower_bound_ok;
  j["cheeger_set_area"] = r.cheeger_set_area;
  j["resolution"] = r.resolution;
  j["iterations"] = r.iterations;
  j["assumptions"] = r.assumptions;
  j["config"] = to_json(r.config);
  return j;
}

nlohmann::json to_json(const KochSolution& s) {
  nlohmann::json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["n"] = s.n;
  j["x"] = s.x ? nlohmann::json(*s.x) : nlohmann::json(nullptr);
  j["d"] = s.d;
  j["iota"] = s.iota;
  j["beta"] = s.beta;
  j["r"] = s.r;
  j["h"] = s.h;
  j["residual"] = s.residual;
  j["tail_bound"] = s.tail_bound;
  j["h_interval"] = s.h_interval;
  j["method"] = s.method;
  j["iterations"] = s.iterations;
  return j;
}

}  // namespace cheeger
