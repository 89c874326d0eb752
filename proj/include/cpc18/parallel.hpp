#pragma once

#include <cstddef>
#include <functional>

namespace cpc18 {

// Worker-count knob for all parallel loops. 0 restores the hardware default.
void set_max_threads(int n);
int max_threads();

// Runs body(i) for i in [0, n). Bodies must write results only to their own
// index; with that discipline the output is identical at any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cpc18
