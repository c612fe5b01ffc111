#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace monoword {

// Worker count: MONOWORD_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Runs body(i) for i in [0, count). Each index is visited exactly once; the
// first exception thrown by any task is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Results are stored by index, so the output order never depends on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& fn)
{
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace monoword
