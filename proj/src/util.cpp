#include "jgk/util.hpp"

#include <algorithm>

namespace jgk {

int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  int t = std::max(1, effective_threads(threads));
  if (n == 0) return;
  std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(t), n);
  if (nt <= 1) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::size_t chunk = (n + nt - 1) / nt;
  for (std::size_t c = 0; c < nt; ++c) {
    std::size_t b = c * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([=, &fn] { fn(b, e, c); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace jgk
