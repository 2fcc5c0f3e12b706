// Copyright 2026 The wct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Minimal fork-join helper for the exhaustive sweeps.  WCT_THREADS caps the
// worker count; the default is the hardware concurrency.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace wct::detail {

  inline std::size_t worker_count(std::size_t jobs) {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("WCT_THREADS")) {
      try {
        long v = std::stol(env);
        if (v >= 1) {
          n = static_cast<std::size_t>(v);
        }
      } catch (...) {
        // ignore a malformed cap
      }
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
  }

  // Calls body(i) for every i in [0, n).  Exceptions are rethrown on the
  // calling thread.
  template <class Body>
  void parallel_for(std::size_t n, Body&& body) {
    std::size_t const workers = worker_count(n);
    if (workers <= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       err;
    std::mutex               err_mu;
    auto                     run = [&] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          body(i);
        }
      } catch (...) {
        std::lock_guard lk(err_mu);
        if (!err) {
          err = std::current_exception();
        }
        next = n;
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(run);
    }
    run();
    for (auto& t : pool) {
      t.join();
    }
    if (err) {
      std::rethrow_exception(err);
    }
  }

  // Smallest i in [0, n) with pred(i), or n.  Work beyond the best hit found
  // so far is skipped, so the answer is the same for any thread count.
  template <class Pred>
  std::size_t parallel_find_first(std::size_t n, Pred&& pred) {
    std::atomic<std::size_t> best{n};
    parallel_for(n, [&](std::size_t i) {
      if (i >= best.load(std::memory_order_relaxed)) {
        return;
      }
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    });
    return best.load();
  }

}  // namespace wct::detail
