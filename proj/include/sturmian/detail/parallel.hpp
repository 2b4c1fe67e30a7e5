#pragma once

// Minimal work-queue parallel-for over an index range. Tasks claim indices
// through an atomic counter; the first exception is rethrown on the caller
// thread after all workers join. Callers that need deterministic output
// write into per-index slots and emit in index order afterwards.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sturmian::detail {

inline int normalize_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Fn>
void parallel_for(std::int64_t begin, std::int64_t end, int jobs, Fn&& fn) {
    jobs = normalize_jobs(jobs);
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    if (jobs == 1 || count == 1) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    if (static_cast<std::int64_t>(jobs) > count) jobs = static_cast<int>(count);

    std::atomic<std::int64_t> next{begin};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::int64_t i = next.fetch_add(1);
            if (i >= end) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sturmian::detail
