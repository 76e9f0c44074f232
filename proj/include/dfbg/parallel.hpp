#pragma once

#include <functional>

namespace dfbg {

// Worker count from the DFBG_WORKERS environment variable (default 1).
int default_worker_count();

// Splits [0, count) into contiguous chunks, one worker thread per chunk.
// Chunks write disjoint output rows, so results do not depend on the
// worker count.
void parallel_for(int count, int workers, const std::function<void(int begin, int end)>& fn);

}  // namespace dfbg
