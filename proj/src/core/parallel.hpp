#pragma once

#include <functional>

namespace ifs {

// Number of worker threads: hardware concurrency capped by the
// INFLATION_SPECTRA_THREADS environment variable (>= 1).
int worker_threads();

// Runs fn(i) for i in [begin, end).  Work is split into fixed chunks that do
// not depend on the thread count, so callers that write results indexed by i
// and reduce them in index order get identical output for any thread count.
void parallel_for(long begin, long end, const std::function<void(long)>& fn);

}  // namespace ifs
