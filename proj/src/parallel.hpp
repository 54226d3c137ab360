// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rtri::detail
{

inline unsigned resolve_threads(unsigned requested, std::size_t work_items)
{
    unsigned n = requested;
    if (n == 0)
    {
        n = std::max(1u, std::thread::hardware_concurrency());
    }
    return static_cast<unsigned>(
        std::min<std::size_t>(n, std::max<std::size_t>(work_items, 1)));
}

//! Run body(i) for i in [0, count) on up to `threads` workers.
template<class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body)
{
    unsigned const workers = resolve_threads(threads, count);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++)
        {
            try
            {
                body(i);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace rtri::detail
