#pragma once

/// \file parallel.hpp
/// Deterministic data parallelism: work is split by index, results land in per-index
/// slots, and reductions run in a fixed pairwise order afterwards. Output is therefore
/// bit-identical for every worker count.

#include <cstddef>
#include <functional>
#include <span>

namespace hma {

/// Worker cap from the HMA_THREADS environment variable (>= 1), else hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Exceptions thrown by the
/// body are rethrown on the calling thread (the one with the lowest index wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Pairwise (tree) summation in a fixed order.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace hma
