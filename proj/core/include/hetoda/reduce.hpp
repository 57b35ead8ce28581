#pragma once

#include <cstddef>
#include <span>

namespace hetoda {

// Pairwise summation in a fixed recursion order: bitwise reproducible and
// O(log n) error growth.  All grid reductions funnel through this.
inline double pairwise_sum(std::span<const double> x) {
  if (x.size() <= 16) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = x.size() / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

}  // namespace hetoda
