#pragma once

#include <cstddef>
#include <functional>

namespace mac {

/// Size guards applied before any exponential enumeration.
struct Limits {
  int max_vertices = 20;              ///< bound for 2^n subset enumerations
  std::size_t max_cells = 2'000'000;  ///< bound for the cell oracle
  unsigned threads = 0;               ///< worker cap; 0 means hardware concurrency
};

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; the first exception thrown is rethrown.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace mac
