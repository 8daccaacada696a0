#pragma once

#include <cstddef>
#include <functional>

namespace hodgeforge {

/// Worker cap: HODGEFORGE_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_cap();

/// Runs fn(i) for i in [0, n). Each index is handled by exactly one worker;
/// results written to per-index slots are therefore order independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hodgeforge
