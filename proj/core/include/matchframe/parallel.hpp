#pragma once

#include <cstddef>
#include <functional>

namespace mframe {

// Runs fn(begin, end) over a static split of [0, count) across `threads`
// workers. threads <= 1 degenerates to a single direct call.
void parallel_chunks(std::size_t count, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace mframe
