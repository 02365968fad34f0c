#pragma once

// Deterministic worker-pool reduction.  Monte Carlo loops and enumeration
// sums split [0, count) into fixed-size chunks; chunk boundaries depend only
// on the range, and chunk results fold in chunk order, so the outcome is
// bit-identical for any worker count (including 1).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kerov {

namespace detail {
inline std::atomic<int>& thread_override() {
  static std::atomic<int> v{0};
  return v;
}
}  // namespace detail

// n <= 0 clears the override and falls back to KEROV_THREADS / hardware.
inline void set_thread_count(int n) {
  detail::thread_override().store(n > 0 ? n : 0);
}

inline int thread_count() {
  int o = detail::thread_override().load();
  if (o > 0) return o;
  if (const char* env = std::getenv("KEROV_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// body(local, i) accumulates index i into a chunk-local Acc;
// fold(total, part) merges finished chunks, called in chunk order.
template <class Acc, class Body, class Fold>
Acc chunked_reduce(std::int64_t count, std::int64_t chunk, Acc zero, Body body,
                   Fold fold) {
  if (count <= 0) return zero;
  if (chunk < 1) chunk = 1;
  const std::int64_t n_chunks = (count + chunk - 1) / chunk;
  int workers = std::min<std::int64_t>(thread_count(), n_chunks);

  std::vector<Acc> parts(static_cast<std::size_t>(n_chunks), zero);
  auto run_chunk = [&](std::int64_t c) {
    Acc local = zero;
    const std::int64_t lo = c * chunk;
    const std::int64_t hi = std::min(count, lo + chunk);
    for (std::int64_t i = lo; i < hi; ++i) body(local, i);
    parts[static_cast<std::size_t>(c)] = std::move(local);
  };

  if (workers <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
      for (;;) {
        std::int64_t c = next.fetch_add(1);
        if (c >= n_chunks) return;
        try {
          run_chunk(c);
        } catch (...) {
          std::lock_guard<std::mutex> g(err_mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
  }

  Acc total = std::move(zero);
  for (auto& p : parts) fold(total, std::move(p));
  return total;
}

}  // namespace kerov
