// Copyright (c) secsim contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace secsim::detail {

inline unsigned resolve_workers(unsigned requested, std::size_t jobs) {
  unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (w == 0) w = 1;
  return static_cast<unsigned>(std::min<std::size_t>(w, jobs));
}

/// Runs fn(i) for i in [0, jobs) on up to `workers` threads. Results must
/// not depend on scheduling; the first exception is rethrown on the caller.
template <class Fn>
void parallel_for(std::size_t jobs, unsigned workers, const Fn& fn) {
  const unsigned w = resolve_workers(workers, jobs);
  if (w <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace secsim::detail
