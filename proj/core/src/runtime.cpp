#include "cmcgk/runtime.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cmcgk::runtime {

int thread_budget() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("CMCGK_THREADS")) {
        try {
            n = std::min(n, std::max(1, std::stoi(env)));
        } catch (...) {
            n = 1;
        }
    }
    return n;
}

void parallel_for(int begin, int end, const std::function<void(int)>& body) {
    const int count = end - begin;
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1 || count < 8) {
        for (int k = begin; k < end; ++k) body(k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (int k = lo; k < hi; ++k) body(k);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cmcgk::runtime
