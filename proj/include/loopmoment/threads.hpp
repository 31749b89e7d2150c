#pragma once

#include <functional>

namespace loopmoment {

// Worker count for internal parallelism, capped by the LOOPMOMENT_THREADS
// environment variable.
int thread_cap();

// Runs fn(0..n-1) on up to thread_cap() workers.  Callers get determinism
// by writing to disjoint, preallocated slots.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace loopmoment
