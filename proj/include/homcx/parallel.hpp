#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace homcx::detail {

// Runs fn(t) for t in [0, n_tasks). With threads > 1 the tasks are pulled
// from a shared counter by a small worker pool; callers keep determinism by
// writing into per-task slots and merging in task order. The first exception
// thrown by any task is rethrown after all workers stop.
inline void run_tasks(int n_tasks, int threads, const std::function<void(int)>& fn)
{
    if (threads <= 1 || n_tasks <= 1) {
        for (int t = 0; t < n_tasks; ++t)
            fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    int n_workers = std::min(threads, n_tasks);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                int t = next.fetch_add(1);
                if (t >= n_tasks)
                    return;
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace homcx::detail
