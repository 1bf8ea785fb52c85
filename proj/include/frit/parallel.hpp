// Minimal deterministic parallel-for.
//
// Work is split into contiguous chunks, one per worker, so any reduction done
// per-chunk and combined in chunk order is bitwise reproducible regardless of
// thread scheduling. The worker count is capped by the FRIT_THREADS environment
// variable (default: hardware concurrency).
#pragma once

#include <cstdint>
#include <functional>

namespace frit {

// Worker cap: FRIT_THREADS if set to a positive integer, else hardware concurrency.
int max_threads();

// Invokes fn(begin, end) on disjoint ranges covering [0, count). Ranges are
// assigned deterministically; fn must only write to locations owned by its range.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace frit
