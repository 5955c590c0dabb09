#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace pisolab {

// Worker count: min(hardware, PISO_LAB_THREADS if set), at least 1.
inline unsigned thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("PISO_LAB_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < n)
      n = static_cast<unsigned>(cap);
  }
  return n;
}

// Evaluates fn(0..count-1), possibly in parallel, and returns results in
// index order so downstream output stays deterministic.
template <typename R, typename Fn>
std::vector<R> parallel_collect(size_t count, Fn fn) {
  std::vector<R> out(count);
  const unsigned workers = std::min<size_t>(thread_budget(), count ? count : 1);
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (size_t i = w; i < count; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace pisolab
