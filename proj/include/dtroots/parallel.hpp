#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dtroots {

/// Number of worker threads to use when a caller passes width 0.
[[nodiscard]] inline unsigned default_width() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for every i in [0, count) on up to `width` threads and returns
/// the results indexed by i, so the output never depends on the schedule.
/// The first exception thrown by a worker is rethrown on the calling thread.
template <typename Fn>
auto parallel_map(std::size_t count, unsigned width, Fn fn) {
    using Result = decltype(fn(std::size_t{}));
    std::vector<Result> results(count);
    if (width == 0) width = default_width();
    width = static_cast<unsigned>(std::min<std::size_t>(width, count));
    if (width <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(width);
        for (unsigned t = 0; t < width; ++t) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        results[i] = fn(i);
                    } catch (...) {
                        std::scoped_lock lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace dtroots
