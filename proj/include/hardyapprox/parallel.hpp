#pragma once

#include <functional>

namespace hardy {

// Number of worker threads used for grid loops. Reads HARDY_APPROX_THREADS
// once per process; values < 1 fall back to the hardware count.
int thread_cap();

// Runs fn(begin, end) over a partition of [0, n). The partition depends only
// on n and thread_cap(), and chunks are elementwise-independent, so results
// are bit-identical for any thread count.
void parallel_for(int n, const std::function<void(int, int)>& fn);

}  // namespace hardy
