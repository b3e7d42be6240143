#pragma once

#include <cstddef>
#include <functional>

namespace sigmaevo {

// Worker count: SIGMAEVO_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n) on thread_count() workers. Indices are handed
// out dynamically; the first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sigmaevo
