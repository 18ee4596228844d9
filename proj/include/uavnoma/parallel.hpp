#pragma once

#include <cstddef>
#include <functional>

namespace uavnoma {

/// Worker count: UAVNOMA_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = default).
/// Each index must write only to its own output slot; the first exception in
/// index order is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace uavnoma
