#pragma once

#include <cstddef>
#include <functional>

namespace colorcode {

// COLORCODE_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
int thread_limit();

// Runs body(i) for i in [0, count) on up to `threads` workers. Exceptions are rethrown in index order.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace colorcode
