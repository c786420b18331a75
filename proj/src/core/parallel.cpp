#include "parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ifs {

int worker_threads() {
    int n = int(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("INFLATION_SPECTRA_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

void parallel_for(long begin, long end, const std::function<void(long)>& fn) {
    const long total = end - begin;
    if (total <= 0) return;
    const int threads = worker_threads();
    if (threads == 1 || total == 1) {
        for (long i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<long> next{begin};
    auto worker = [&] {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= end) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads - 1));
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace ifs
