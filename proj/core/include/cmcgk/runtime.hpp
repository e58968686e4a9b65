#pragma once

#include <functional>

namespace cmcgk::runtime {

// Worker count: hardware concurrency capped by the CMCGK_THREADS environment
// variable (values < 1 mean 1).
int thread_budget();

// Runs body(k) for k in [begin, end); splits across threads when the budget
// and range allow.  Bodies must write disjoint state.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace cmcgk::runtime
