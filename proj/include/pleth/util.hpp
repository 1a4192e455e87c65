#ifndef PLETH_UTIL_HPP
#define PLETH_UTIL_HPP

#include <cstddef>
#include <optional>

#include <functional>

namespace pleth {

// Worker count: explicit request, else PLETHYRS_THREADS, else hardware.
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index is
// processed exactly once; exceptions are rethrown on the calling thread.
// Callers combine per-index results afterwards in index order, which keeps
// reductions deterministic.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace pleth

#endif
