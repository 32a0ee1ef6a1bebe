#pragma once

// Minimal fork-join helper.  REGRET_ULT_THREADS caps the worker count; the
// default follows the hardware.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace regult {

inline unsigned worker_count() {
  if (const char* env = std::getenv("REGRET_ULT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024)
      return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Partitions [0, n) into contiguous chunks, one thread per chunk, and runs
// body(chunk, begin, end).  Chunk indices are dense from 0 so callers can
// merge per-chunk results in order.  The first exception is rethrown.
template <class Body>
void parallel_chunks(std::size_t n, Body&& body) {
  if (n == 0) return;
  const std::size_t chunks = std::min<std::size_t>(worker_count(), n);
  if (chunks <= 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks - 1);
  std::exception_ptr first_error;
  std::mutex error_mu;
  const auto run = [&](std::size_t c) {
    try {
      body(c, n * c / chunks, n * (c + 1) / chunks);
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mu);
      if (!first_error) first_error = std::current_exception();
    }
  };
  for (std::size_t c = 1; c < chunks; ++c) pool.emplace_back(run, c);
  run(0);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace regult
