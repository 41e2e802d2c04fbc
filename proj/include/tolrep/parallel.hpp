#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tolrep {

inline int effective_jobs(int jobs) {
  if (jobs < 1) jobs = static_cast<int>(std::thread::hardware_concurrency());
  return jobs < 1 ? 1 : jobs;
}

/// Runs fn(i) for every i in [0, count). Workers pull indices dynamically;
/// fn must write only to slot i of caller-owned storage, so results are
/// identical for any schedule. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  jobs = effective_jobs(jobs);
  if (jobs <= 1 || count < 32) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> workers;
  const int spawn = jobs < static_cast<int>(count) ? jobs : static_cast<int>(count);
  workers.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) workers.emplace_back(work);
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tolrep
