#pragma once

#include <cstddef>
#include <functional>

namespace cmfnip {

/// Worker count from CMFNIP_WORKERS, else std::thread::hardware_concurrency(),
/// never less than 1.
unsigned worker_count();

/// Calls body(i) for every i in [0, count). Work is split over worker_count()
/// threads in contiguous blocks; calls made from inside a worker run inline so
/// nested use never oversubscribes. The first exception thrown is rethrown
/// after all workers finish. Callers write results into per-index slots, so
/// output is independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> & body);

}
