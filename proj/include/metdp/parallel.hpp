#pragma once

#include <cstddef>
#include <functional>

namespace metdp {

/// Worker count: THRESHOLD_DP_THREADS when set to a positive integer, else
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Calls fn(i) for every i in [0, count) on up to `workers` threads
/// (0 means worker_count()). Exceptions from fn are rethrown on the caller
/// after all workers finish; the first one wins.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  unsigned workers = 0);

}  // namespace metdp
