// Command-line front end: solve, necks, koch, render, oracle.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cheeger/cheeger_set.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/koch.hpp"
#include "cheeger/marching_squares.hpp"
#include "cheeger/polygon_io.hpp"
#include "cheeger/report_json.hpp"
#include "cheeger/retract.hpp"
#include "cheeger/solver.hpp"
#include "cheeger/version.hpp"

#ifdef CHEEGER_HAS_ORACLE
#include "cheeger/tv_oracle.hpp"
#endif

namespace {

enum ExitCode : int { kOk = 0, kInputError = 1, kNeck = 2, kNumerical = 3 };

struct Options {
  std::string input;
  std::string out;
  int resolution = 512;
  std::optional<double> tol;
  bool unsafe_skip_neck_check = false;
  bool trusted_input = false;
  int koch_n = 0;
  bool table = false;
  int grid = 256;
};

cheeger::JordanPolygon load(const Options& o) {
  return cheeger::read_polygon_json(
      o.input, o.trusted_input ? cheeger::JordanPolygon::Validation::trusted : cheeger::JordanPolygon::Validation::full);
}

cheeger::CheegerConfig config_of(const Options& o) {
  cheeger::CheegerConfig cfg;
  cfg.base_resolution = o.resolution;
  cfg.tolerance_r = o.tol;
  cfg.unsafe_skip_neck_check = o.unsafe_skip_neck_check;
  return cfg;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_solve(const Options& o) {
  const cheeger::CheegerReport rep = cheeger::solve(load(o), config_of(o));
  print_json(cheeger::to_json(rep));
  return kOk;
}

int cmd_necks(const Options& o) {
  const cheeger::JordanPolygon p = load(o);
  const cheeger::CheegerConfig cfg = config_of(o);
  cfg.validate();
  const cheeger::DistanceField coarse = cheeger::build_field(p, cfg.base_resolution);
  const cheeger::DistanceField fine = cheeger::build_field(p, 2 * cfg.base_resolution);
  const cheeger::Bracket b = cheeger::bracket(p, fine);
  const cheeger::NeckCheck check = cheeger::neck_check(coarse, fine, b, cfg);
  nlohmann::json j;
  j["tool"] = cheeger::kToolName;
  j["version"] = cheeger::kVersion;
  j["bracket"] = cheeger::to_json(b);
  j["neck_check"] = cheeger::to_json(check);
  print_json(j);
  if (check.verdict == cheeger::NeckVerdict::fail) {
    std::cerr << "neck detected at r = " << *check.offending_radius << '\n';
    return kNeck;
  }
  return kOk;
}

int cmd_koch(const Options& o) {
  if (!o.table) {
    print_json(cheeger::to_json(cheeger::solve_koch(o.koch_n)));
    return kOk;
  }
  std::printf("%3s  %-18s  %-18s  %-18s  %-12s  %-40s\n", "n", "x_n", "r_n", "h_n", "tail", "h(K) interval");
  for (int n = 1; n <= o.koch_n; ++n) {
    const cheeger::KochSolution s = cheeger::solve_koch(n);
    char xbuf[32];
    if (s.x) {
      std::snprintf(xbuf, sizeof xbuf, "%.15f", *s.x);
    } else {
      std::snprintf(xbuf, sizeof xbuf, "-");
    }
    std::printf("%3d  %-18s  %.15f  %.15f  %.6e  [%.12f, %.12f]\n", n, xbuf, s.r, s.h, s.tail_bound,
                s.h_interval[0], s.h_interval[1]);
  }
  return kOk;
}

int cmd_render(const Options& o) {
  const cheeger::JordanPolygon p = load(o);
  const cheeger::CheegerConfig cfg = config_of(o);
  const cheeger::CheegerReport rep = cheeger::solve(p, cfg);
  cheeger::RetractShape retract;
  std::optional<cheeger::CheegerSetGeometry> set;
  if (rep.method == cheeger::Method::convex_exact) {
    const auto ring = cheeger::inner_retract_convex(p, rep.r);
    if (!ring) throw cheeger::EmptyRetract("retract is empty at the computed radius");
    retract.emplace_back(ring->vertices().begin(), ring->vertices().end());
    set = cheeger::cheeger_set_convex(ring->vertices(), rep.r);
  } else {
    const cheeger::DistanceField f = cheeger::build_field(p, 2 * cfg.base_resolution);
    retract = cheeger::trace_contours(cheeger::view_of(f), rep.r);
    set = cheeger::dilate_grid(f, rep.r);
  }
  cheeger::render_svg(p, retract, *set, rep.h, o.out);
  nlohmann::json j;
  j["tool"] = cheeger::kToolName;
  j["version"] = cheeger::kVersion;
  j["svg"] = o.out;
  j["h"] = rep.h;
  j["r"] = rep.r;
  j["method"] = std::string(cheeger::to_string(rep.method));
  j["cheeger_set"] = {{"area", set->area}, {"perimeter", set->perimeter}};
  print_json(j);
  return kOk;
}

int cmd_oracle(const Options& o) {
#ifdef CHEEGER_HAS_ORACLE
  const cheeger::OracleResult res = cheeger::oracle_h(load(o), o.grid);
  nlohmann::json j;
  j["tool"] = cheeger::kToolName;
  j["version"] = cheeger::kVersion;
  j["h_approx"] = res.h_approx;
  j["iterations"] = res.iterations;
  j["resolution"] = res.resolution;
  print_json(j);
  return kOk;
#else
  (void)o;
  throw cheeger::InputError("this build does not include the oracle (configure with -DCHEEGER_WITH_ORACLE=ON)");
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cheeger constants of planar polygons without necks"};
  app.set_version_flag("--version", std::string(cheeger::kVersion));
  app.require_subcommand(1);
  Options o;

  auto add_polygon_flags = [&o](CLI::App* sub, bool solver_flags) {
    sub->add_option("--input", o.input, "polygon JSON file {\"vertices\": [[x, y], ...]}")->required();
    sub->add_flag("--trusted-input", o.trusted_input, "skip the self-intersection check");
    if (solver_flags) {
      sub->add_option("--resolution", o.resolution, "base grid resolution")->check(CLI::PositiveNumber);
      sub->add_option("--tol", o.tol, "bisection tolerance on r");
      sub->add_flag("--unsafe-skip-neck-check", o.unsafe_skip_neck_check,
                    "solve without certifying the no-neck property");
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "solve for h and r; prints a report");
  add_polygon_flags(solve, true);
  CLI::App* necks = app.add_subcommand("necks", "check connectivity of inner parallel sets over the bracket");
  add_polygon_flags(necks, false);
  necks->add_option("--resolution", o.resolution, "base grid resolution")->check(CLI::PositiveNumber);
  CLI::App* koch = app.add_subcommand("koch", "analytic Cheeger constant of the Koch step K_n");
  koch->add_option("--n", o.koch_n, "construction step (1..12)")->required();
  koch->add_flag("--table", o.table, "print steps 1..n as a table");
  CLI::App* render = app.add_subcommand("render", "solve and write an SVG of the domain, retract, and Cheeger set");
  add_polygon_flags(render, true);
  render->add_option("--out", o.out, "SVG output path")->required();
  CLI::App* oracle = app.add_subcommand("oracle", "graph-cut approximation of h");
  add_polygon_flags(oracle, false);
  oracle->add_option("--grid", o.grid, "grid resolution (>= 64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*necks) return cmd_necks(o);
    if (*koch) return cmd_koch(o);
    if (*render) return cmd_render(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const cheeger::NeckDetected& e) {
    std::cerr << "error: " << e.what() << " (radius " << e.radius() << ", components " << e.components() << ")\n";
    return kNeck;
  } catch (const cheeger::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const cheeger::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kInputError;
  } catch (const cheeger::DegenerateDomain& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const cheeger::Disconnected& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  }
  return kInputError;
}
