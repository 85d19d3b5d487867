#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace primecert {

/// out[i] = f(i) for i in [0, count), computed on up to `jobs` threads.
/// The output order never depends on the scheduling; the first exception
/// thrown by any worker is rethrown on the calling thread.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F&& f) {
  std::vector<T> out(count);
  jobs = static_cast<unsigned>(std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (count + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j * chunk; i < std::min(count, (j + 1) * chunk); ++i) out[i] = f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace primecert
