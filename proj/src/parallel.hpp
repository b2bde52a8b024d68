#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace distill::detail
{

inline unsigned
resolve_workers(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("DISTILL_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(begin, end, chunk_index) over fixed-size chunks of [0, n).
// Chunk boundaries depend only on n, never on the worker count.
template <class Fn>
void
parallel_chunks(std::uint64_t n, std::uint64_t chunk, unsigned workers, Fn fn)
{
    const std::uint64_t n_chunks = (n + chunk - 1) / chunk;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), std::max<std::uint64_t>(1, n_chunks)));
    std::uint64_t next = 0;
    std::mutex mu;
    std::exception_ptr err;
    auto body = [&] {
        for (;;) {
            std::uint64_t c;
            {
                std::lock_guard lk(mu);
                if (next >= n_chunks || err)
                    return;
                c = next++;
            }
            try {
                fn(c * chunk, std::min(n, (c + 1) * chunk), c);
            } catch (...) {
                std::lock_guard lk(mu);
                if (!err)
                    err = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; i++)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }
    if (err)
        std::rethrow_exception(err);
}

}  // namespace distill::detail
