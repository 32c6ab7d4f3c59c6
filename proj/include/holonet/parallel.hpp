#pragma once

#include <cstddef>
#include <functional>

namespace holonet {

// Worker count: HOLONET_THREADS if set (clamped to [1, 64]), otherwise the
// hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, count).  Work is split into contiguous blocks, one
// per worker.  Callers that need determinism must write results into
// index-addressed slots; the iteration order within a block is ascending.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace holonet
