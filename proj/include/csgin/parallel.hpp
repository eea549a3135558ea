#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace csgin {

/// Worker count from CSGIN_THREADS, else the hardware concurrency (at least 1).
std::size_t worker_count();

namespace detail {
void run_pool(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& body);
}

/// Runs task(i) for i in [0, n) on up to worker_count() threads. Results land in
/// index order; the first exception thrown by any task is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& task) {
  std::vector<std::optional<R>> slots(n);
  std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) slots[i].emplace(task(i));
  } else {
    detail::run_pool(n, workers, [&](std::size_t i) { slots[i].emplace(task(i)); });
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace csgin
