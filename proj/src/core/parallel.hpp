#pragma once

#include <cstddef>
#include <functional>

namespace halfline {

// Worker count for grid sweeps: min(hardware, HALFLINE_THREADS if set).
int thread_budget();

// Runs body(i) for i in [0, n) on up to thread_budget() workers. Cells must
// be independent; results keyed by index stay deterministic regardless of
// scheduling. The first exception thrown by any cell is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace halfline
