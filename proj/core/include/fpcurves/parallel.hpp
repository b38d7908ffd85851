#ifndef FPCURVES_PARALLEL_HPP
#define FPCURVES_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fpc {

/// Default worker count: hardware parallelism, at least 1.
inline unsigned default_worker_count() noexcept {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Runs body(worker_index) on `workers` threads and joins them. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <class Body>
void run_workers(unsigned workers, Body&& body) {
    if (workers <= 1) {
        body(0u);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    body(w);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

/// Static strided sharding: worker w handles indices w, w + W, w + 2W, ...
/// The assignment depends only on (count, workers), never on scheduling.
template <class Body>
void parallel_for_index(std::size_t count, unsigned workers, Body&& body) {
    if (workers == 0) workers = 1;
    run_workers(workers, [&](unsigned w) {
        for (std::size_t i = w; i < count; i += workers) body(i);
    });
}

}  // namespace fpc

#endif
