#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hmra {

// Global worker cap (the CLI's --threads flag). 0 = hardware concurrency.
void set_max_threads(int n);
int max_threads();

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// Chunk boundaries depend only on `chunk`, never on the thread count, so
// chunk-local accumulators combined in chunk order reduce bit-identically
// for any --threads value.
void parallel_chunks(std::int64_t n, std::int64_t chunk,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn);

// Independent per-index work (no reduction): fn(i) for i in [0, n).
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

inline int num_chunks(std::int64_t n, std::int64_t chunk) {
  return static_cast<int>((n + chunk - 1) / chunk);
}

}  // namespace hmra
