#pragma once

#include <cstddef>
#include <functional>

namespace gaborlat::detail {

/// Worker cap: min(hardware concurrency, GABORLAT_THREADS if set).
int thread_cap();

/// Runs body(i) for i in [0, n) on up to thread_cap() workers with static
/// index partitioning. Each index is visited exactly once, so writes to
/// per-index slots are race-free and results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gaborlat::detail
