// Fixed work-unit scheduling. Results are written per unit index and reduced
// by the caller in index order, so output never depends on the thread count.
#pragma once

#include <cstddef>
#include <functional>

namespace exdiv {

/// EXDIV_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
unsigned default_threads();

/// 0 means default_threads().
unsigned resolve_threads(unsigned requested);

/// Runs work(0), ..., work(count - 1) on up to `threads` workers. Once a unit
/// throws, unstarted units are skipped and the exception with the lowest
/// index among the failures is rethrown.
void run_units(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& work);

}  // namespace exdiv
