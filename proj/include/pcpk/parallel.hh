#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace pcpk
{
    /// Runs body(i) for i in [0, count) on up to `jobs` threads, striding over indices.
    /// The first exception thrown by any body is rethrown after all threads join.
    inline auto parallel_for(std::size_t count, unsigned jobs, const std::function<void (std::size_t)> & body) -> void
    {
        if (jobs <= 1 || count <= 1) {
            for (std::size_t i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        auto threads = std::min<std::size_t>(jobs, count);
        for (std::size_t t = 0 ; t < threads ; ++t)
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t i = t ; i < count ; i += threads)
                        body(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                }
            });
        for (auto & w : workers)
            w.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}
