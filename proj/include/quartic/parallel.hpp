#pragma once

// Index-based worker pool for embarrassingly parallel sweeps. Work items are
// claimed atomically; callers preallocate result slots indexed by i, so the
// assembled output is ordered by parameter, never by completion.

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quartic {

template <class F>
void parallel_for(long jobs, long n, F&& f) {
    if (n <= 0) return;
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, n);
    if (jobs == 1) {
        for (long i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<long> next(0);
    std::exception_ptr first_error = nullptr;
    std::mutex error_mx;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (long w = 0; w < jobs; ++w)
        workers.emplace_back([&]() {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mx);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace quartic
