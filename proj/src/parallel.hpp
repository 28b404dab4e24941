// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 EWT Project Contributors

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ewt::detail {

/// Worker count for `jobs` independent tasks: never more than the hardware
/// offers, and capped by the EWT_THREADS environment variable when set.
inline std::size_t thread_budget(std::size_t jobs) {
    std::size_t budget = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EWT_THREADS")) {
        char* end = nullptr;
        const unsigned long parsed = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) {
            budget = std::min<std::size_t>(budget, parsed);
        }
    }
    return std::min(budget, std::max<std::size_t>(1, jobs));
}

/// Run fn(0) .. fn(count-1) across the thread budget. The first exception
/// thrown by any task is rethrown on the calling thread after all workers
/// have joined.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) {
        return;
    }
    const std::size_t workers = thread_budget(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) {
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::exception_ptr& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
}

} // namespace ewt::detail
