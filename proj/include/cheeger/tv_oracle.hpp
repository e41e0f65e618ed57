#pragma once

#include <vector>

#include "cheeger/geometry.hpp"

namespace cheeger {

struct OracleResult {
  double h_approx = 0.0;
  int iterations = 0;  ///< number of min-cut solves
  int resolution = 0;
  std::vector<double> lambdas;  ///< Dinkelbach ratio sequence
  double final_perimeter = 0.0;  ///< discrete perimeter of the returned set
  double final_area = 0.0;
  long long final_cells = 0;
};

/// Discrete Cheeger constant by Dinkelbach iteration over s/t min cuts on the
/// cells inside p, with 16-neighborhood Cauchy-Crofton edge weights.
/// Throws ResolutionTooSmall (resolution < 64) and Disconnected.
OracleResult oracle_h(const JordanPolygon& p, int resolution);

}  // namespace cheeger
