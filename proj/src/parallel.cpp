#include "littlent/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace littlent {

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    int begin = int(std::int64_t(count) * t / threads);
    int end = int(std::int64_t(count) * (t + 1) / threads);
    pool.emplace_back([&fn, begin, end] {
      for (int i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace littlent
