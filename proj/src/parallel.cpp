#include "xxnet/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace xxnet {

int thread_count() {
    if (const char* env = std::getenv("XXNET_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace {
thread_local bool inside_parallel_region = false;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t nt = static_cast<std::size_t>(thread_count());
    if (n == 0) return;
    // nested regions run serially: the outer loop already owns the workers
    if (nt <= 1 || n == 1 || inside_parallel_region) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        workers.emplace_back([&, t]() {
            inside_parallel_region = true;
            try {
                for (std::size_t i = t; i < n; i += nt) {
                    if (failed.load(std::memory_order_relaxed)) return;
                    fn(i);
                }
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace xxnet
