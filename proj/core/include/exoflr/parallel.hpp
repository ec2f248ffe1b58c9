#pragma once

#include <cstddef>
#include <functional>

namespace exoflr {

/// Runs body(i) for i = 0..count-1 on `threads` workers (0 = hardware
/// concurrency). Each index is processed exactly once; since all callers
/// write results into per-index slots and derive randomness from per-index
/// substreams, output never depends on the thread count. The first exception
/// thrown by any body is rethrown after all workers finished.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace exoflr
