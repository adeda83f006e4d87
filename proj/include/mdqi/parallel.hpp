#pragma once

#include <cstddef>
#include <functional>

namespace mdqi {

// Worker count: MULTIDQI_THREADS if set (>=1), else hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [begin, end) on a static partition of the range.
// Callers must write results into per-index slots so the outcome does not
// depend on the number of workers.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

// Chunked variant: fn(chunk_begin, chunk_end), one call per worker.
void parallel_chunks(std::size_t begin, std::size_t end,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mdqi
