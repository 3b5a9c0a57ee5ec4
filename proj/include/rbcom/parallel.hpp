#pragma once

#include <cstddef>
#include <functional>

namespace rbcom {

// Worker count for parallel maps: hardware concurrency, capped by the
// RBCOM_THREADS environment variable when set (minimum 1).
unsigned worker_count();

// Apply fn(i) for i in [0, n). Work is split into contiguous chunks across
// worker threads; each index writes only its own slot, so results do not
// depend on the thread count. Exceptions from workers are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rbcom
