// Copyright 2026 The wtred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WTRED_PARALLEL_H
#define WTRED_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wtred {

/// Worker count: WTRED_THREADS if set and positive, else the hardware concurrency.
size_t thread_count();

/// Runs body(i, worker) for every i in [0, n). Indices are handed out dynamically,
/// so callers must combine per-index results in an order-independent way.
template <typename Body>
void parallel_for(size_t n, Body &&body) {
    size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; i++) {
            body(i, size_t{0});
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        threads.emplace_back([&, w]() {
            try {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= n) {
                        break;
                    }
                    body(i, w);
                }
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n);
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace wtred

#endif
