#include "cheeger/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "cheeger/errors.hpp"
#include "cheeger/retract.hpp"

namespace cheeger {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

void CheegerConfig::validate() const {
  if (tolerance_r && !(*tolerance_r > 0.0)) throw InputError("tolerance must be positive");
  if (base_resolution < 16) {
    throw ResolutionTooSmall("resolution must be at least 16, got " + std::to_string(base_resolution));
  }
  if (neck_samples < 3) throw InputError("neck_samples must be at least 3");
  if (max_iterations < 1) throw InputError("max_iterations must be positive");
}

std::string_view to_string(NeckVerdict v) {
  switch (v) {
    case NeckVerdict::pass: return "pass";
    case NeckVerdict::fail: return "fail";
    case NeckVerdict::skipped: return "skipped";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::convex_exact: return "convex-exact";
    case Method::grid: return "grid";
    case Method::koch_analytic: return "koch-analytic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

AreaEvaluator AreaEvaluator::exact(const JordanPolygon& convex) {
  if (!is_convex(convex)) throw NonConvexInput("exact area backend requires a convex polygon");
  AreaEvaluator e;
  e.polygon_ = std::make_shared<const JordanPolygon>(convex);
  e.exact_ = true;
  return e;
}

AreaEvaluator AreaEvaluator::grid(const JordanPolygon& p, int base_resolution) {
  AreaEvaluator e;
  e.polygon_ = std::make_shared<const JordanPolygon>(p);
  e.exact_ = false;
  e.coarse_ = std::make_shared<const DistanceField>(build_field(p, base_resolution));
  e.fine_ = std::make_shared<const DistanceField>(build_field(p, 2 * base_resolution));
  return e;
}

AreaEvaluator::Sample AreaEvaluator::area(double r) const {
  if (exact_) {
    const auto retract = inner_retract_convex(*polygon_, r);
    return {retract ? polygon_area(*retract) : 0.0, 0.0};
  }
  const ExtrapolatedArea a = retract_area_extrapolated(*coarse_, *fine_, r);
  return {a.area, a.error_bound};
}

double AreaEvaluator::g(double r) const { return area(r).area - kPi * r * r; }

double AreaEvaluator::minkowski_content(double r) const {
  if (exact_) return cheeger::minkowski_content(*polygon_, r);
  return cheeger::minkowski_content(*coarse_, *fine_, r);
}

void AreaEvaluator::refine() {
  if (exact_) return;
  coarse_ = fine_;
  fine_ = std::make_shared<const DistanceField>(build_field(*polygon_, 2 * fine_->resolution));
}

int AreaEvaluator::resolution() const { return exact_ ? 0 : coarse_->resolution; }

// ---------------------------------------------------------------------------

double grid_inradius(const DistanceField& f) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < f.values.size(); ++k) {
    if (f.values[k] > f.values[best]) best = k;
  }
  const int i = static_cast<int>(best % f.nx);
  const int j = static_cast<int>(best / f.nx);
  const double b = f.values[best];
  double gain = 0.0;
  auto parabola_gain = [b](double a, double c) {
    const double curv = a - 2.0 * b + c;
    if (!(curv < 0.0)) return 0.0;
    return std::max(0.0, -(a - c) * (a - c) / (8.0 * curv));
  };
  if (i > 0 && i + 1 < f.nx) gain += parabola_gain(f.at(i - 1, j), f.at(i + 1, j));
  if (j > 0 && j + 1 < f.ny) gain += parabola_gain(f.at(i, j - 1), f.at(i, j + 1));
  // The true maximum lies within half a cell diagonal of some node.
  return b + std::min(gain, 0.5 * std::sqrt(2.0) * f.cell);
}

namespace {

Bracket make_bracket(double inradius, double area, double inradius_error) {
  Bracket b{0.5 * inradius, 0.5 * std::sqrt(area / kPi)};
  if (b.r_lo >= b.r_hi) b.r_hi += 0.5 * inradius_error;
  if (!(b.r_lo > 0.0) || b.r_lo >= b.r_hi) {
    throw DegenerateDomain("bracket collapsed: r_lo = " + fmt(b.r_lo) + ", r_hi = " + fmt(b.r_hi));
  }
  return b;
}

}  // namespace

Bracket bracket(const JordanPolygon& p) {
  if (is_convex(p)) return make_bracket(chebyshev_center(p).radius, polygon_area(p), 0.0);
  return bracket(p, build_field(p, 512));
}

Bracket bracket(const JordanPolygon& p, const DistanceField& f) {
  if (is_convex(p)) return make_bracket(chebyshev_center(p).radius, polygon_area(p), 0.0);
  return make_bracket(grid_inradius(f), polygon_area(p), 0.5 * std::sqrt(2.0) * f.cell);
}

// ---------------------------------------------------------------------------

NeckCheck neck_check(const DistanceField& coarse, const DistanceField& fine, const Bracket& b,
                     const CheegerConfig& cfg) {
  if (cfg.neck_samples < 3) throw InputError("neck_samples must be at least 3");
  NeckCheck out;
  out.resolutions = {coarse.resolution, fine.resolution};
  const int m = cfg.neck_samples;
  out.verdict = NeckVerdict::pass;
  for (int k = 0; k < m; ++k) {
    const double r = k + 1 == m ? b.r_hi : b.r_lo + (b.r_hi - b.r_lo) * k / (m - 1);
    const int c0 = retract_components(coarse, r);
    const int c1 = retract_components(fine, r);
    out.radii.push_back(r);
    out.components.push_back(c0);
    out.components_fine.push_back(c1);
    if ((c0 > 1 || c1 > 1) && !out.offending_radius) {
      out.verdict = NeckVerdict::fail;
      out.offending_radius = r;
    }
  }
  return out;
}

NeckCheck neck_check(const JordanPolygon& p, const Bracket& b, const CheegerConfig& cfg) {
  const DistanceField coarse = build_field(p, cfg.base_resolution);
  const DistanceField fine = build_field(p, 2 * cfg.base_resolution);
  return neck_check(coarse, fine, b, cfg);
}

// ---------------------------------------------------------------------------

double steiner_verify(const CheegerReport& report, const RetractGeometry& geometry) {
  if (!(geometry.area > 0.0)) throw EmptyRetract("steiner_verify: retract has no area");
  const double r = report.r;
  const double e_area = geometry.area + geometry.minkowski_content * r + kPi * r * r;
  const double e_perimeter = geometry.minkowski_content + 2.0 * kPi * r;
  return std::abs(e_perimeter * r / e_area - 1.0);
}

CheegerReport solve(const JordanPolygon& p, const CheegerConfig& cfg) {
  cfg.validate();
  const bool convex = is_convex(p);
  AreaEvaluator eval = convex ? AreaEvaluator::exact(p) : AreaEvaluator::grid(p, cfg.base_resolution);
  const double tol = cfg.tolerance_for(convex);

  CheegerReport rep;
  rep.config = cfg;
  rep.config.tolerance_r = tol;
  rep.method = convex ? Method::convex_exact : Method::grid;
  rep.bracket = convex ? bracket(p) : bracket(p, eval.fine());
  rep.assumptions.push_back("reach(Omega^r) >= r is assumed under the no-neck hypothesis, not verified");
  rep.assumptions.push_back(
      "no-neck property certified over the whole bracket; a domain connected only at r = 1/h is rejected");

  if (cfg.unsafe_skip_neck_check) {
    rep.neck_check.verdict = NeckVerdict::skipped;
    rep.assumptions.push_back("neck check skipped by caller; the inner Cheeger formula may not apply");
  } else {
    rep.neck_check = convex ? neck_check(p, rep.bracket, cfg)
                            : neck_check(eval.coarse(), eval.fine(), rep.bracket, cfg);
    if (rep.neck_check.verdict == NeckVerdict::fail) {
      const auto it = std::find(rep.neck_check.radii.begin(), rep.neck_check.radii.end(),
                                *rep.neck_check.offending_radius);
      const auto k = static_cast<std::size_t>(it - rep.neck_check.radii.begin());
      const int comps = std::max(rep.neck_check.components[k], rep.neck_check.components_fine[k]);
      throw NeckDetected("neck detected: inner parallel set has " + std::to_string(comps) +
                             " components at r = " + fmt(*rep.neck_check.offending_radius),
                         *rep.neck_check.offending_radius, comps);
    }
  }

  double lo = rep.bracket.r_lo;
  double hi = rep.bracket.r_hi;
  AreaEvaluator::Sample s_lo = eval.area(lo);
  AreaEvaluator::Sample s_hi = eval.area(hi);
  double g_lo = s_lo.area - kPi * lo * lo;
  double g_hi = s_hi.area - kPi * hi * hi;
  const double exact_slack = 1e-13 * polygon_area(p);

  if (!convex) {
    // Endpoint signs must clear the noise band; escalate resolution while ambiguous.
    while ((std::abs(g_lo) <= s_lo.error_bound || std::abs(g_hi) <= s_hi.error_bound) &&
           eval.resolution() < 2 * cfg.base_resolution) {
      eval.refine();
      s_lo = eval.area(lo);
      s_hi = eval.area(hi);
      g_lo = s_lo.area - kPi * lo * lo;
      g_hi = s_hi.area - kPi * hi * hi;
    }
  }
  const double band_lo = convex ? exact_slack : s_lo.error_bound;
  const double band_hi = convex ? exact_slack : s_hi.error_bound;
  if (g_lo < -band_lo || g_hi > band_hi) {
    throw NoSignChange("g(r) = |Omega^r| - pi r^2 has no sign change on the bracket: g(r_lo) = " + fmt(g_lo) +
                       ", g(r_hi) = " + fmt(g_hi) + "; rerun at a higher resolution");
  }

  double root = 0.0;
  bool done = false;
  int iter = 0;
  if (g_lo <= 0.0) {
    root = lo;
    done = true;
  } else if (g_hi >= 0.0) {
    root = hi;
    done = true;
  }
  while (!done && hi - lo > tol) {
    if (iter >= cfg.max_iterations) {
      throw NumericalError("bisection did not reach tolerance within " + std::to_string(cfg.max_iterations) +
                           " iterations");
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++iter;
    const AreaEvaluator::Sample sm = eval.area(mid);
    const double gm = sm.area - kPi * mid * mid;
    if (!convex && std::abs(gm) <= sm.error_bound) {
      // Within the noise floor: stop at the midpoint rather than chase noise.
      root = mid;
      done = true;
      break;
    }
    if (gm > 0.0) {
      lo = mid;
      g_lo = gm;
    } else {
      hi = mid;
      g_hi = gm;
    }
  }
  if (!done) {
    if (convex && g_lo > g_hi) {
      // g is smooth on the final bracket; its secant root sharpens the bisection estimate.
      root = std::clamp(lo + g_lo * (hi - lo) / (g_lo - g_hi), lo, hi);
    } else {
      root = 0.5 * (lo + hi);
    }
  }

  rep.iterations = iter;
  rep.r = root;
  rep.h = 1.0 / root;
  const AreaEvaluator::Sample final_sample = eval.area(root);
  rep.retract_area = final_sample.area;
  rep.residual = final_sample.area - kPi * root * root;
  rep.resolution = eval.resolution();

  if (rep.retract_area > 0.0) {
    const double m = eval.minkowski_content(root);
    rep.steiner_check.minkowski_content = m;
    rep.steiner_check.cheeger_ratio_error = steiner_verify(rep, {rep.retract_area, m});
    rep.cheeger_set_area = rep.retract_area + m * root + kPi * root * root;
  }
  const double slack = convex ? 1e-9 : 5e-3;
  rep.area_lower_bound_ok = rep.cheeger_set_area >= 4.0 * kPi * root * root * (1.0 - slack);
  return rep;
}

}  // namespace cheeger
