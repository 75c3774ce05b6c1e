#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace vandiver {

// Runs fn(0), ..., fn(count-1) on up to `jobs` threads and returns the
// results in index order, whatever order they complete in. The first
// exception thrown by any call is rethrown after all workers stop.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, F&& fn) {
    std::vector<std::optional<T>> slots(count);
    auto collect = [&] {
        std::vector<T> out;
        out.reserve(count);
        for (auto& s : slots) out.push_back(std::move(*s));
        return out;
    };
    if (count == 0) return {};
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
        return collect();
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return collect();
}

}  // namespace vandiver
