#pragma once

#include <cstddef>
#include <functional>

namespace skinnyqr {

//! Worker cap for parallel sections (defaults to hardware concurrency).
std::size_t max_threads();
void set_max_threads(std::size_t n);

//! Run fn(0..num_tasks) on up to max_threads() workers. Task outputs must go
//! to task-indexed storage; scheduling order is unspecified. Exceptions from
//! tasks are captured and rethrown on the calling thread.
void parallel_for(std::size_t num_tasks, const std::function<void(std::size_t)>& fn);

}  // namespace skinnyqr
