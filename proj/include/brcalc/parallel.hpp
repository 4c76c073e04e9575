#ifndef BRCALC_PARALLEL_HPP
#define BRCALC_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace brcalc {

/// Worker count: BRCALC_THREADS when set, hardware concurrency otherwise.
inline unsigned worker_count() {
    if (const char* env = std::getenv("BRCALC_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n). Tasks must not share mutable state; results
/// should be written into preallocated slots so aggregation order stays
/// deterministic regardless of the pool size.
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= n) return;
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
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace brcalc

#endif
