#include "loopmoment/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace loopmoment {

int thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("LOOPMOMENT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1 && v < cap) cap = v;
  }
  return cap;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace loopmoment
