#pragma once

#include <cstddef>
#include <functional>

namespace bvgamma {

/// Worker count: BVGAMMA_THREADS when set and positive, otherwise the
/// hardware concurrency (at least one).
unsigned thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() workers.
/// Each index is visited exactly once; callers write results into
/// per-index slots and reduce afterwards in index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace bvgamma
