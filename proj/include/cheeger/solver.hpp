#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cheeger/distance_field.hpp"
#include "cheeger/geometry.hpp"

namespace cheeger {

/// Search interval for the inner Cheeger radius.
struct Bracket {
  double r_lo = 0.0;  ///< half the inradius
  double r_hi = 0.0;  ///< half the radius of the disk with the same area
};

struct CheegerConfig {
  /// Bisection width; defaults to 1e-8 (exact backend) or 1e-4 (grid).
  std::optional<double> tolerance_r;
  int base_resolution = 512;
  int neck_samples = 33;
  int max_iterations = 200;
  bool unsafe_skip_neck_check = false;

  double tolerance_for(bool exact_backend) const { return tolerance_r.value_or(exact_backend ? 1e-8 : 1e-4); }
  /// Throws InputError on out-of-range values.
  void validate() const;
};

enum class NeckVerdict { pass, fail, skipped };
enum class Method { convex_exact, grid, koch_analytic };

std::string_view to_string(NeckVerdict v);
std::string_view to_string(Method m);

struct NeckCheck {
  NeckVerdict verdict = NeckVerdict::skipped;
  std::vector<double> radii;
  std::vector<int> components;       ///< at base resolution
  std::vector<int> components_fine;  ///< at twice the base resolution
  std::optional<double> offending_radius;
  std::array<int, 2> resolutions{0, 0};
};

struct SteinerCheck {
  double cheeger_ratio_error = 0.0;  ///< |P(E) r / |E| - 1|
  double minkowski_content = 0.0;
};

struct CheegerReport {
  double h = 0.0;
  double r = 0.0;
  Bracket bracket;
  double residual = 0.0;      ///< |Omega^r| - pi r^2 at the returned r
  double retract_area = 0.0;  ///< |Omega^r|
  NeckCheck neck_check;
  Method method = Method::grid;
  SteinerCheck steiner_check;
  bool area_lower_bound_ok = false;  ///< |E| >= pi (2 r)^2
  double cheeger_set_area = 0.0;
  int resolution = 0;  ///< final grid resolution (0 for analytic backends)
  int iterations = 0;
  CheegerConfig config;
  std::vector<std::string> assumptions;
};

/// |Omega^r| from either the exact convex backend or cached grid fields.
class AreaEvaluator {
 public:
  struct Sample {
    double area = 0.0;
    double error_bound = 0.0;
  };

  static AreaEvaluator exact(const JordanPolygon& convex);
  static AreaEvaluator grid(const JordanPolygon& p, int base_resolution);

  bool is_exact() const { return exact_; }
  Sample area(double r) const;
  double g(double r) const;
  /// Outer Minkowski content of Omega^r. Throws EmptyRetract.
  double minkowski_content(double r) const;

  /// Grid only: reuse the fine field as coarse and build one at twice its resolution.
  void refine();
  int resolution() const;
  const DistanceField& coarse() const { return *coarse_; }
  const DistanceField& fine() const { return *fine_; }
  const JordanPolygon& polygon() const { return *polygon_; }

 private:
  AreaEvaluator() = default;

  std::shared_ptr<const JordanPolygon> polygon_;
  bool exact_ = false;
  std::shared_ptr<const DistanceField> coarse_;
  std::shared_ptr<const DistanceField> fine_;
};

/// Bracket from the Chebyshev radius (convex) or the refined grid maximum.
/// Throws DegenerateDomain when the interval collapses.
Bracket bracket(const JordanPolygon& p);
Bracket bracket(const JordanPolygon& p, const DistanceField& f);

/// Inradius estimate from a field: node maximum refined by separable parabolas.
double grid_inradius(const DistanceField& f);

/// Connectivity of Omega^r at neck_samples radii spanning the bracket, at the
/// base and doubled resolutions. An empty retract counts as connected.
NeckCheck neck_check(const JordanPolygon& p, const Bracket& b, const CheegerConfig& cfg);
NeckCheck neck_check(const DistanceField& coarse, const DistanceField& fine, const Bracket& b,
                     const CheegerConfig& cfg);

/// Solves |Omega^r| = pi r^2 by bisection. Throws NeckDetected, NoSignChange.
CheegerReport solve(const JordanPolygon& p, const CheegerConfig& cfg = {});

struct RetractGeometry {
  double area = 0.0;
  double minkowski_content = 0.0;
};

/// |P(E) r / |E| - 1| with |E| and P(E) from the Steiner formulas.
/// Throws EmptyRetract when the retract has no area.
double steiner_verify(const CheegerReport& report, const RetractGeometry& geometry);

}  // namespace cheeger
