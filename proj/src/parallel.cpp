#include "hmra2d/parallel.hpp"

#include <algorithm>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hmra {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) {
  g_max_threads.store(n);
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
  int n = g_max_threads.load();
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

namespace {

// Pulls chunk indices from a shared counter; first exception wins and is
// rethrown on the calling thread.
void run_workers(int n_workers, int n_chunks,
                 const std::function<void(int)>& run_chunk) {
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      int ci = next.fetch_add(1);
      if (ci >= n_chunks) return;
      try {
        run_chunk(ci);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  if (n_workers <= 1 || n_chunks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers) - 1);
    for (int t = 0; t < n_workers - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

void parallel_chunks(std::int64_t n, std::int64_t chunk,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  const int nc = num_chunks(n, chunk);
  run_workers(std::min(max_threads(), nc), nc, [&](int ci) {
    const std::int64_t b = static_cast<std::int64_t>(ci) * chunk;
    const std::int64_t e = std::min(n, b + chunk);
    fn(ci, b, e);
  });
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  run_workers(std::min<std::int64_t>(max_threads(), n), static_cast<int>(n),
              [&](int i) { fn(i); });
}

}  // namespace hmra
