#pragma once

#include <cstddef>
#include <functional>

namespace pdcop {

/// Worker threads to use: hardware concurrency, capped by PDCOP_THREADS when set.
unsigned worker_count();

/// Runs task(i) for i in [0, n) on up to worker_count() threads.
/// Tasks must write disjoint outputs. The first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace pdcop
