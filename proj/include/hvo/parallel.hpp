#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hvo {

// Applies fn to every item on up to `jobs` threads. Results keep the input order,
// so any reduction over them is independent of the job count.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) -> std::vector<decltype(fn(items[0]))> {
    using R = decltype(fn(items[0]));
    std::vector<R> out(items.size());
    const size_t n = items.size();
    const size_t workers = std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) {
                try {
                    out[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

} // namespace hvo
