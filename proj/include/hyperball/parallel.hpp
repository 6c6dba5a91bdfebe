#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hyperball {

enum class Execution { serial, parallel };

// Runs body(i) for i in [0, count). The parallel path uses OpenMP with dynamic
// scheduling; an exception from any index is rethrown after the loop, the one
// with the smallest index winning so failures are reproducible.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution mode);

template <class T>
std::vector<T> map_indices(std::size_t count, const std::function<T(std::size_t)>& f, Execution mode) {
    std::vector<T> out(count);
    for_each_index(count, [&](std::size_t i) { out[i] = f(i); }, mode);
    return out;
}

// Number of threads the parallel path uses (1 without OpenMP).
int sweep_threads();

}  // namespace hyperball
