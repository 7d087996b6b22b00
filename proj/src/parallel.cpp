#include "ppclab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace ppclab {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_thread_count(unsigned n) { g_threads.store(n); }

unsigned thread_count() {
  unsigned n = g_threads.load();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

std::size_t chunk_count(std::size_t n, std::size_t min_chunk) {
  if (n == 0) return 0;
  min_chunk = std::max<std::size_t>(1, min_chunk);
  std::size_t by_size = (n + min_chunk - 1) / min_chunk;
  return std::min<std::size_t>(thread_count(), by_size);
}

void parallel_chunks(std::size_t n, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  const std::size_t chunks = chunk_count(n, min_chunk);
  if (chunks == 0) return;
  if (chunks == 1) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks - 1);
  const std::size_t stride = n / chunks;
  const std::size_t extra = n % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = stride + (c < extra ? 1 : 0);
    std::size_t end = begin + len;
    if (c + 1 == chunks) {
      fn(c, begin, end);
    } else {
      pool.emplace_back(fn, c, begin, end);
    }
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace ppclab
