#pragma once

#include <cstddef>
#include <functional>

namespace ppclab {

// Global worker count used by the counting loops.  0 = hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Number of chunks parallel_chunks will use for a range of length n; depends
// only on n, min_chunk and the configured worker count.
std::size_t chunk_count(std::size_t n, std::size_t min_chunk);

// Splits [0,n) into chunk_count(n, min_chunk) contiguous chunks and runs
// fn(chunk_index, begin, end) on a worker per chunk.  Callers that reduce
// should collect per-chunk partials and combine them in chunk order so the
// result does not depend on scheduling.
void parallel_chunks(std::size_t n, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace ppclab
