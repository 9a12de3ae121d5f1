#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hexcut {

/// Worker count from HEXCUT_JOBS, else 1.
inline int default_jobs() {
  if (const char* env = std::getenv("HEXCUT_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (...) {
    }
  }
  return 1;
}

/// Runs body(task, worker) for task in [0, count) on `jobs` threads. Tasks are
/// handed out through a shared counter, so uneven task costs balance out.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Body>
void parallel_tasks(std::size_t count, int jobs, Body&& body) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t t = 0; t < count; ++t) body(t, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = next++; t < count; t = next++) body(t, w);
        } catch (...) {
          errors[w] = std::current_exception();
          next = count;
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hexcut
