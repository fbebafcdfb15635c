#pragma once

#include <cstddef>
#include <functional>

namespace loopforge {

/// LOOPFORGE_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Runs task(i) for every i in [0, count) on up to `workers` threads.
/// Tasks are handed out in index order; callers that need deterministic
/// output write into slot i and reduce afterwards. The first exception
/// thrown by a task is rethrown once all workers have stopped.
void parallel_for(std::size_t count, std::function<void(std::size_t)> const& task,
                  std::size_t workers = worker_count());

}  // namespace loopforge
