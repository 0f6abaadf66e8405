#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bellcheck {

/// Worker cap from BELLCHECK_WORKERS; 1 when unset or unparsable.
std::size_t worker_cap_from_env();

/// Calls fn(shard) for every shard in [0, shards) using at most `workers`
/// threads. Callers store per-shard results by index, so the outcome never
/// depends on scheduling. The first exception thrown by any shard is
/// rethrown after all threads join.
template <class Fn>
void for_each_shard(std::size_t shards, std::size_t workers, Fn&& fn) {
    if (workers <= 1 || shards <= 1) {
        for (std::size_t s = 0; s < shards; ++s) fn(s);
        return;
    }
    const std::size_t threads = workers < shards ? workers : shards;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t s = t; s < shards; s += threads) {
                    try {
                        fn(s);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace bellcheck
