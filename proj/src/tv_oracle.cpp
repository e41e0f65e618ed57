#include "cheeger/tv_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cheeger/distance_field.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/max_flow.hpp"
#include "cheeger/retract.hpp"

namespace cheeger {

namespace {

struct Offset {
  int di;
  int dj;
  double weight;
};

// One representative per direction of the 16-neighborhood; the opposite
// offsets carry the same weight.
std::array<Offset, 8> crofton_offsets(double cell) {
  std::array<Offset, 8> offs{{{1, 0, 0}, {2, 1, 0}, {1, 1, 0}, {1, 2, 0}, {0, 1, 0}, {-1, 2, 0}, {-1, 1, 0}, {-2, 1, 0}}};
  std::array<double, 8> angle{};
  for (std::size_t k = 0; k < offs.size(); ++k) angle[k] = std::atan2(offs[k].dj, offs[k].di);
  // Already sorted by angle in [0, pi).
  const double pi = std::numbers::pi;
  for (std::size_t k = 0; k < offs.size(); ++k) {
    const double prev = k == 0 ? angle.back() - pi : angle[k - 1];
    const double next = k + 1 == offs.size() ? angle.front() + pi : angle[k + 1];
    const double span = 0.5 * (next - prev);
    const double len = cell * std::hypot(offs[k].di, offs[k].dj);
    offs[k].weight = cell * cell * span / (2.0 * len);
  }
  return offs;
}

}  // namespace

OracleResult oracle_h(const JordanPolygon& p, int resolution) {
  if (resolution < 64) {
    throw ResolutionTooSmall("oracle resolution must be at least 64, got " + std::to_string(resolution));
  }
  const DistanceField f = build_field(p, resolution);
  if (retract_components(f, std::numeric_limits<double>::min()) > 1) {
    throw Disconnected("domain rasterizes to more than one component at resolution " + std::to_string(resolution));
  }
  const int nx = f.nx;
  const int ny = f.ny;
  std::vector<long long> node(f.values.size(), -1);
  long long cells = 0;
  for (std::size_t k = 0; k < f.values.size(); ++k) {
    if (f.values[k] > 0.0) node[k] = cells++;
  }
  if (cells == 0) throw Disconnected("domain contains no grid cells at resolution " + std::to_string(resolution));

  const double cell_area = f.cell * f.cell;
  const std::array<Offset, 8> offs = crofton_offsets(f.cell);
  auto node_at = [&](int i, int j) -> long long {
    if (i < 0 || j < 0 || i >= nx || j >= ny) return -1;
    return node[static_cast<std::size_t>(j) * nx + i];
  };

  // Discrete perimeter of a cell set given as a membership vector over nodes.
  auto perimeter = [&](const std::vector<char>& in) {
    double total = 0.0;
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const long long u = node_at(i, j);
        if (u < 0 || !in[u]) continue;
        for (const Offset& o : offs) {
          for (int sgn = -1; sgn <= 1; sgn += 2) {
            const long long v = node_at(i + sgn * o.di, j + sgn * o.dj);
            if (v < 0 || !in[v]) total += o.weight;
          }
        }
      }
    }
    return total;
  };

  OracleResult res;
  res.resolution = resolution;
  std::vector<char> current(static_cast<std::size_t>(cells), 1);
  double current_perimeter = perimeter(current);
  double current_area = static_cast<double>(cells) * cell_area;
  double lambda = current_perimeter / current_area;
  res.lambdas.push_back(lambda);

  for (int iter = 0; iter < 100; ++iter) {
    MaxFlow flow(static_cast<std::size_t>(cells));
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const long long u = node_at(i, j);
        if (u < 0) continue;
        double to_sink = 0.0;
        for (const Offset& o : offs) {
          const long long fwd = node_at(i + o.di, j + o.dj);
          const long long back = node_at(i - o.di, j - o.dj);
          if (fwd >= 0) {
            flow.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(fwd), o.weight, o.weight);
          } else {
            to_sink += o.weight;
          }
          if (back < 0) to_sink += o.weight;
        }
        flow.add_terminal(static_cast<std::size_t>(u), lambda * cell_area, to_sink);
      }
    }
    flow.solve();
    ++res.iterations;
    const std::vector<bool> side = flow.source_side();
    std::vector<char> next(static_cast<std::size_t>(cells), 0);
    long long count = 0;
    for (long long u = 0; u < cells; ++u) {
      if (side[static_cast<std::size_t>(u)]) {
        next[u] = 1;
        ++count;
      }
    }
    if (count == 0) break;
    const double per = perimeter(next);
    const double area = static_cast<double>(count) * cell_area;
    const double energy = per - lambda * area;
    // Stop once the cut no longer improves the ratio strictly.
    if (!(energy < -1e-12 * lambda * current_area)) break;
    const double next_lambda = per / area;
    if (!(next_lambda < lambda)) break;
    lambda = next_lambda;
    current = std::move(next);
    current_perimeter = per;
    current_area = area;
    res.lambdas.push_back(lambda);
  }
  res.h_approx = lambda;
  res.final_perimeter = current_perimeter;
  res.final_area = current_area;
  res.final_cells = static_cast<long long>(std::count(current.begin(), current.end(), 1));
  return res;
}

}  // namespace cheeger
