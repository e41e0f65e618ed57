#pragma once

#include <cstddef>
#include <functional>

namespace cheeger {

/// Worker count: CHEEGER_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Override the worker count for this process (0 restores the default).
void set_thread_count(int threads);

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunks never
/// overlap, so results written per index are independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace cheeger
