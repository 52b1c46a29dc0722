#pragma once

#include <cstddef>
#include <functional>

namespace tzeta {

/// Worker count: the TZETA_THREADS environment variable when set to a
/// positive integer, else the hardware concurrency.
int thread_count();

/// Overrides the environment for the current process (0 restores it).
void set_thread_count(int n);

/// Runs body(i) for i in [0, n). Each index is independent; callers store
/// per-index results and reduce them in index order, so the outcome does not
/// depend on the worker count. Calls nested inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tzeta
