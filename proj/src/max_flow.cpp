#include "cheeger/max_flow.hpp"

#include <algorithm>
#include <limits>

namespace cheeger {

MaxFlow::MaxFlow(std::size_t nodes) : excess_(nodes, 0.0), sink_cap_(nodes, 0.0) {}

void MaxFlow::add_edge(std::size_t u, std::size_t v, double cap, double reverse_cap) {
  pending_.push_back({static_cast<std::int32_t>(u), static_cast<std::int32_t>(v), cap, reverse_cap});
  max_cap_ = std::max({max_cap_, cap, reverse_cap});
}

void MaxFlow::add_terminal(std::size_t u, double source_cap, double sink_cap) {
  // Flow through both links of one node is sent directly.
  const double direct = std::min(source_cap, sink_cap);
  cut_ += direct;
  excess_[u] += source_cap - direct;
  sink_cap_[u] += sink_cap - direct;
  max_cap_ = std::max({max_cap_, source_cap, sink_cap});
}

void MaxFlow::build_arcs() {
  const std::size_t n = excess_.size();
  head_.resize(2 * pending_.size());
  cap_.resize(2 * pending_.size());
  first_.assign(n + 1, 0);
  for (std::size_t k = 0; k < pending_.size(); ++k) {
    const PendingEdge& e = pending_[k];
    head_[2 * k] = e.v;
    cap_[2 * k] = e.cap;
    head_[2 * k + 1] = e.u;
    cap_[2 * k + 1] = e.reverse_cap;
    ++first_[static_cast<std::size_t>(e.u) + 1];
    ++first_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) first_[i + 1] += first_[i];
  order_.resize(head_.size());
  std::vector<std::int32_t> fill(first_.begin(), first_.end() - 1);
  for (std::size_t k = 0; k < pending_.size(); ++k) {
    order_[static_cast<std::size_t>(fill[static_cast<std::size_t>(pending_[k].u)]++)] = static_cast<std::int32_t>(2 * k);
    order_[static_cast<std::size_t>(fill[static_cast<std::size_t>(pending_[k].v)]++)] = static_cast<std::int32_t>(2 * k + 1);
  }
  pending_.clear();
  pending_.shrink_to_fit();
}

void MaxFlow::activate(std::int32_t u) {
  const std::int32_t d = label_[static_cast<std::size_t>(u)];
  buckets_[static_cast<std::size_t>(d)].push_back(u);
  top_ = std::max(top_, d);
}

// Exact distance labels to the sink by reverse breadth-first search. Nodes
// that cannot reach the sink get label n and never become active again.
void MaxFlow::global_relabel() {
  const auto n = static_cast<std::int32_t>(excess_.size());
  std::fill(label_.begin(), label_.end(), n);
  std::vector<std::int32_t> queue;
  queue.reserve(excess_.size());
  for (std::int32_t i = 0; i < n; ++i) {
    if (sink_cap_[static_cast<std::size_t>(i)] > eps_) {
      label_[static_cast<std::size_t>(i)] = 1;
      queue.push_back(i);
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::int32_t v = queue[q];
    const std::int32_t dv = label_[static_cast<std::size_t>(v)];
    for (std::int32_t k = first_[static_cast<std::size_t>(v)]; k < first_[static_cast<std::size_t>(v) + 1]; ++k) {
      const std::int32_t a = order_[static_cast<std::size_t>(k)];
      const std::int32_t u = head_[static_cast<std::size_t>(a)];
      // u -> v is the sister of a.
      if (label_[static_cast<std::size_t>(u)] == n && cap_[static_cast<std::size_t>(a ^ 1)] > eps_) {
        label_[static_cast<std::size_t>(u)] = dv + 1;
        queue.push_back(u);
      }
    }
  }
  for (auto& b : buckets_) b.clear();
  top_ = 0;
  for (std::int32_t i = 0; i < n; ++i) {
    current_[static_cast<std::size_t>(i)] = first_[static_cast<std::size_t>(i)];
    if (excess_[static_cast<std::size_t>(i)] > eps_ && label_[static_cast<std::size_t>(i)] < n) activate(i);
  }
  work_since_relabel_ = 0;
}

void MaxFlow::discharge(std::int32_t u) {
  const auto n = static_cast<std::int32_t>(excess_.size());
  const auto su = static_cast<std::size_t>(u);
  double& ex = excess_[su];
  for (;;) {
    const std::int32_t du = label_[su];
    if (du == 1 && sink_cap_[su] > eps_) {
      const double delta = std::min(ex, sink_cap_[su]);
      sink_cap_[su] -= delta;
      ex -= delta;
      cut_ += delta;
      if (ex <= eps_) return;
    }
    const std::int32_t end = first_[su + 1];
    for (std::int32_t& k = current_[su]; k < end; ++k) {
      const std::int32_t a = order_[static_cast<std::size_t>(k)];
      const auto sa = static_cast<std::size_t>(a);
      if (cap_[sa] <= eps_) continue;
      const std::int32_t v = head_[sa];
      const auto sv = static_cast<std::size_t>(v);
      if (label_[sv] != du - 1) continue;
      const double delta = std::min(ex, cap_[sa]);
      cap_[sa] -= delta;
      cap_[sa ^ 1] += delta;
      const bool was_idle = excess_[sv] <= eps_;
      excess_[sv] += delta;
      ex -= delta;
      if (was_idle && excess_[sv] > eps_) activate(v);
      if (ex <= eps_) return;
    }
    // Relabel.
    std::int32_t best = n;
    if (sink_cap_[su] > eps_) best = 1;
    for (std::int32_t k = first_[su]; k < end; ++k) {
      const std::int32_t a = order_[static_cast<std::size_t>(k)];
      if (cap_[static_cast<std::size_t>(a)] > eps_) {
        best = std::min(best, label_[static_cast<std::size_t>(head_[static_cast<std::size_t>(a)])] + 1);
      }
    }
    work_since_relabel_ += 12 + (end - first_[su]);
    current_[su] = first_[su];
    label_[su] = std::min(best, n);
    if (label_[su] >= n) return;
  }
}

double MaxFlow::solve() {
  eps_ = 1e-13 * std::max(max_cap_, std::numeric_limits<double>::min());
  build_arcs();
  const std::size_t n = excess_.size();
  label_.assign(n, 0);
  current_.assign(n, 0);
  buckets_.assign(n + 1, {});
  global_relabel();
  const std::int64_t relabel_period = 6 * static_cast<std::int64_t>(n) + static_cast<std::int64_t>(head_.size()) / 2;
  for (;;) {
    while (top_ > 0 && buckets_[static_cast<std::size_t>(top_)].empty()) --top_;
    if (top_ == 0) break;
    const std::int32_t u = buckets_[static_cast<std::size_t>(top_)].back();
    buckets_[static_cast<std::size_t>(top_)].pop_back();
    // Stale entries: the node was relabelled or emptied since it was queued.
    if (label_[static_cast<std::size_t>(u)] != top_ || excess_[static_cast<std::size_t>(u)] <= eps_) continue;
    discharge(u);
    const std::int32_t du = label_[static_cast<std::size_t>(u)];
    if (excess_[static_cast<std::size_t>(u)] > eps_ && du < static_cast<std::int32_t>(n)) activate(u);
    if (work_since_relabel_ > relabel_period) global_relabel();
  }
  global_relabel();
  return cut_;
}

std::vector<bool> MaxFlow::source_side() const {
  const auto n = static_cast<std::int32_t>(excess_.size());
  std::vector<bool> side(excess_.size(), false);
  for (std::size_t i = 0; i < excess_.size(); ++i) side[i] = label_[i] >= n;
  return side;
}

}  // namespace cheeger
