#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace gonseq {

/// Worker count for `requested`; 0 means one per hardware thread.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Least index i in [0, count) with pred(i, worker) true, evaluated by `jobs`
/// workers. Every index below the returned one is evaluated, so the answer
/// does not depend on scheduling. `pred` must be safe to call concurrently
/// for distinct workers; `worker` is in [0, jobs).
template <class Pred>
std::optional<std::size_t> find_first(std::size_t count, int jobs, Pred&& pred) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(count, 1u << 20))));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i, 0)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](int worker) {
    try {
      for (std::size_t i = next.fetch_add(1); i < best.load(); i = next.fetch_add(1)) {
        if (!pred(i, worker)) continue;
        std::size_t seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
        return;
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(jobs - 1);
  for (int w = 1; w < jobs; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  const std::size_t found = best.load();
  if (found < count) return found;
  return std::nullopt;
}

}  // namespace gonseq
