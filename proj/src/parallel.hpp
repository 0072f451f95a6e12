#pragma once

#include <cstddef>
#include <functional>

namespace entwave::detail {

// Worker count for `jobs` independent units: hardware concurrency, capped by
// the ENTWAVE_THREADS environment variable, never more than `jobs`.
unsigned worker_count(std::size_t jobs);

// Runs body(k) for k in [0, n). Each index is handled by exactly one worker;
// the first exception thrown by any body is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace entwave::detail
