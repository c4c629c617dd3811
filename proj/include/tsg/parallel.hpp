#ifndef TSG_PARALLEL_HPP
#define TSG_PARALLEL_HPP

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tsg {

// Applies fn to 0..count-1 across jobs workers. Results land at their index,
// so output order never depends on the worker count or on scheduling.
template <typename Fn>
auto parallel_map(int count, int jobs, Fn&& fn) -> std::vector<decltype(fn(0))> {
    using R = decltype(fn(0));
    std::vector<R> out(count);
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    const int workers = std::min(jobs, count);
    std::vector<std::thread> pool;
    std::mutex fail_mutex;
    std::exception_ptr failure;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace tsg

#endif  // TSG_PARALLEL_HPP
