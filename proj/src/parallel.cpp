#include "gaborlat/detail/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gaborlat::detail {

int thread_cap() {
    static const int cap = [] {
        int n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
        if (const char* env = std::getenv("GABORLAT_THREADS")) {
            const int requested = std::atoi(env);
            if (requested >= 1) n = std::min(n, requested);
        }
        return n;
    }();
    return cap;
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t)>& body) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_cap()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gaborlat::detail
