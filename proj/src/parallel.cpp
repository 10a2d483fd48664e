#include "dirac/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace dirac {

namespace {
std::atomic<int> g_threads{0};  // 0 = auto
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0); }

int thread_count() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_chunks(
    std::int64_t n,
    const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const int workers = std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(n, 1));
  if (workers <= 1 || n < 2) {
    if (n > 0) fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t b = w * chunk;
    const std::int64_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  parallel_for_chunks(n, [&fn](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) fn(i);
  });
}

}  // namespace dirac
