#pragma once

#include <functional>

namespace hetoda {

// Worker cap: HETODA_THREADS if set (>= 1), else hardware concurrency.
int max_threads();

// Runs fn(i) for i in [begin, end) on contiguous chunks across worker
// threads.  Chunks never overlap, so results are identical to the serial
// order for pointwise writes; reductions must stay outside.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace hetoda
