#pragma once

#include <functional>

namespace spectriples {

// Worker cap: min(hardware_concurrency, SPECTRIPLES_THREADS) with a floor of 1.
// The environment variable is read once, on first use.
int max_threads();

// Runs fn(i) for i in [0, n). Work is split into contiguous chunks across at
// most max_threads() workers. Each index must write only to its own output
// slots, so results are identical for any thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace spectriples
