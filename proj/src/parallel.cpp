#include "ordh/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ordh {

namespace {
thread_local bool inside_worker = false;
}

std::size_t worker_count()
{
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("ORDERED_HARMONICS_THREADS")) {
        try {
            const long value = std::stol(cap);
            if (value >= 1)
                workers = std::min(workers, static_cast<std::size_t>(value));
        } catch (const std::exception&) {
            // unparsable cap is ignored
        }
    }
    return workers;
}

void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk)
{
    if (count == 0)
        return;
    const std::size_t chunks =
        inside_worker ? 1 : std::min(worker_count(), (count + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
    if (chunks <= 1) {
        body(0, count);
        return;
    }

    const std::size_t step = (count + chunks - 1) / chunks;
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = c * step;
        const std::size_t end = std::min(count, begin + step);
        if (begin >= end)
            break;
        threads.emplace_back([&, c, begin, end] {
            inside_worker = true;
            try {
                body(begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace ordh
