#pragma once

#include <cstddef>
#include <functional>

namespace xxnet {

/// Number of worker threads: XXNET_THREADS if set, else hardware concurrency.
int thread_count();

/// Runs fn(i) for i in [0, n) on a static interleaved partition
/// (worker t handles i = t, t + T, t + 2T, ...). Workers write only to
/// disjoint, index-addressed slots, so results are bit-identical for any
/// thread count. fn must not throw across threads; exceptions are captured
/// and rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace xxnet
