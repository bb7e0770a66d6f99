#pragma once

#include <cstddef>
#include <functional>

namespace bhh {

// Worker count: BHH_THREADS if set (clamped to >= 1), otherwise
// hardware_concurrency. Results never depend on this value; it only controls
// how independent work items are scheduled.
int thread_count();

// Runs fn(0..n-1), possibly on several threads. Each index must write only
// its own output slot; there is no other synchronization. Exceptions from
// workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace bhh
