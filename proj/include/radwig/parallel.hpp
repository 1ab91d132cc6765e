#pragma once

#include <cstddef>
#include <functional>

namespace radwig {

/// Number of workers for a request: `threads` if positive, otherwise the
/// hardware concurrency (at least 1).
int resolve_threads(int threads) noexcept;

/// Runs body(i) for i in [0, n). Workers pull indices from a shared counter,
/// so uneven rows balance themselves. The first exception thrown by any
/// body is rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace radwig
