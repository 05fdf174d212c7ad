#ifndef ANTIPODE_PARALLEL_HPP
#define ANTIPODE_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace antipode {

/// Worker count: hardware concurrency, capped by ANTIPODE_SPECTRUM_THREADS when set.
inline unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("ANTIPODE_SPECTRUM_THREADS")) {
        try {
            const long v = std::stol(cap);
            if (v >= 1)
                n = std::min<unsigned>(n, static_cast<unsigned>(v));
        } catch (const std::exception&) {
        }
    }
    return n;
}

/*
 * Splits [0, count) into planned_chunks() contiguous chunks and calls
 * body(begin, end, chunk).  Chunk indices are stable so callers can merge
 * per-chunk results in chunk order.
 */
inline unsigned planned_chunks(std::size_t count, std::size_t min_chunk = 64)
{
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), count / min_chunk)));
}

template <class Body>
unsigned parallel_chunks(std::size_t count, Body&& body, std::size_t min_chunk = 64)
{
    const unsigned workers = planned_chunks(count, min_chunk);
    if (workers <= 1) {
        body(std::size_t{0}, count, 0u);
        return 1;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t step = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * step), end = std::min(count, begin + step);
        threads.emplace_back([&, w, begin, end] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return workers;
}

} // namespace antipode

#endif
