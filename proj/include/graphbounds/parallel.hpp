#ifndef GRAPHBOUNDS_PARALLEL_HPP
#define GRAPHBOUNDS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace graphbounds
{
    /// Thread count from GRAPHBOUNDS_THREADS, else hardware concurrency.
    auto default_threads() -> unsigned;

    /// Runs f(i) for i in [0, count) on up to `threads` workers. Indices are
    /// handed out in increasing order; the exception thrown at the lowest
    /// index (if any) is rethrown after every worker stops.
    template <typename F>
    auto parallel_for(std::size_t count, unsigned threads, F && f) -> void
    {
        if (threads <= 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                f(i);
            return;
        }

        std::atomic<std::size_t> next{ 0 };
        std::atomic<bool> stop{ false };
        std::mutex failure_mutex;
        std::size_t failure_index = count;
        std::exception_ptr failure;

        auto worker = [&] {
            while (! stop.load()) {
                auto i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    f(i);
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (i < failure_index) {
                        failure_index = i;
                        failure = std::current_exception();
                    }
                    stop = true;
                }
            }
        };

        std::vector<std::thread> pool;
        auto workers = std::min<std::size_t>(threads, count);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
