#pragma once

#include <cstddef>
#include <functional>

namespace ordh {

/// Worker count: hardware concurrency, capped by ORDERED_HARMONICS_THREADS when set.
std::size_t worker_count();

/// Runs body over [0, count) split into contiguous chunks, one per worker.
///
/// Each index is processed by exactly one call, so any per-index computation that
/// is itself sequential produces bit-identical results regardless of the worker
/// count. Calls made from inside a worker run serially.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t begin, std::size_t end)>& body,
                  std::size_t min_chunk = 1024);

} // namespace ordh
