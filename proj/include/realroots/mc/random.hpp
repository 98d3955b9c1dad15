#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace realroots::mc {

/// Child stream for one sample (or one chunk of samples). Streams depend only
/// on (seed, index), so results do not depend on scheduling or worker count.
inline std::mt19937_64 child_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x5eedu};
  return std::mt19937_64(seq);
}

/// Worker count: REALROOTS_THREADS if set, else hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("REALROOTS_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
    } catch (...) {
    }
  }
  return hw;
}

/// Runs body(task) for task in [0, tasks) on up to worker_count() threads.
/// body must only write to task-indexed storage.
template <class Body>
void parallel_for(std::size_t tasks, Body&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), tasks));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < tasks; t += workers) body(t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace realroots::mc
