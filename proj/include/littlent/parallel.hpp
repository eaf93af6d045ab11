#pragma once

#include <functional>

namespace littlent {

// Runs fn(i) for i in [0, count) across at most `threads` workers in
// contiguous chunks. threads <= 1 runs inline. fn must be safe to call
// concurrently for distinct i.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace littlent
