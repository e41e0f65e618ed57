#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cheeger {

/// Minimum s-t cut on real capacities by highest-label push-relabel.
///
/// Terminal links are stored per node as a single net capacity, which keeps
/// grid graphs with a source and a sink link on every node cheap. Only the
/// preflow phase runs: it fixes the cut value and the sink side of a minimum
/// cut without converting the preflow into a flow.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  /// Adds u -> v with capacity cap and v -> u with capacity reverse_cap.
  void add_edge(std::size_t u, std::size_t v, double cap, double reverse_cap = 0.0);

  /// Adds capacity from the source to u and from u to the sink.
  void add_terminal(std::size_t u, double source_cap, double sink_cap);

  /// Returns the minimum cut value. Call once.
  double solve();

  /// Source side of the minimum cut whose source side is largest: the nodes
  /// that cannot reach the sink in the residual graph after solve().
  std::vector<bool> source_side() const;

  std::size_t node_count() const { return excess_.size(); }

 private:
  struct PendingEdge {
    std::int32_t u;
    std::int32_t v;
    double cap;
    double reverse_cap;
  };

  void build_arcs();
  void global_relabel();
  void discharge(std::int32_t u);
  void activate(std::int32_t u);

  std::vector<double> excess_;
  std::vector<double> sink_cap_;
  std::vector<PendingEdge> pending_;
  // Arcs come in sister pairs (2k, 2k + 1); order_ lists them by tail node,
  // and the arcs of node i are order_[first_[i], first_[i + 1]).
  std::vector<std::int32_t> head_;
  std::vector<double> cap_;
  std::vector<std::int32_t> order_;
  std::vector<std::int32_t> first_;
  std::vector<std::int32_t> current_;
  std::vector<std::int32_t> label_;
  std::vector<std::vector<std::int32_t>> buckets_;  // active nodes by label
  std::int32_t top_ = 0;
  std::int64_t work_since_relabel_ = 0;
  double cut_ = 0.0;
  double eps_ = 0.0;
  double max_cap_ = 0.0;
};

}  // namespace cheeger
