#ifndef MOLANDSCAPE_PARALLEL_HPP
#define MOLANDSCAPE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace molandscape {

/// Worker count used when callers pass 0.
unsigned default_workers();

/**
 * @brief Runs body(begin, end) over contiguous chunks of [0, n).
 *
 * Chunks are disjoint, so bodies that only write their own range produce
 * the same result for every worker count. workers == 0 means
 * default_workers(). Exceptions from a chunk are rethrown on the caller.
 */
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace molandscape

#endif  // MOLANDSCAPE_PARALLEL_HPP
