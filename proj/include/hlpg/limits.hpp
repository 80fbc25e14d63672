#pragma once

#include <cstddef>

namespace hlpg {

// Resource caps for elaboration and exploration. Exceeding any of them
// raises LimitError; results are never truncated.
struct Limits {
  std::size_t max_states = 1000000;     // reachability node cap
  std::size_t max_valuations = 1000000; // per-transition valuation cap
  std::size_t powerset_bound = 16;      // max base-set size for pow(S)
};

} // namespace hlpg
