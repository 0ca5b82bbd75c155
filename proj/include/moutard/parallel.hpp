#pragma once

#include <cstddef>
#include <functional>

namespace moutard {

/// Worker count for grid loops: hardware concurrency, capped by the
/// MOUTARD_LAB_THREADS environment variable when it is set.
unsigned worker_count();

/// Runs body(k) for k in [0, n) across worker_count() threads. The body must
/// only write to slots it owns.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace moutard
