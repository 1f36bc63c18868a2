#pragma once

#include <cstdint>

#include "fsd/core.hpp"

namespace fsd {

struct SearchConfig {
    // Upper bound on schedule length; defaults to sum of (a+l+b), which the
    // back-to-back schedule always achieves.
    Time horizon = -1;
    // Cap on explored search nodes; 0 means unlimited.
    std::uint64_t node_limit = 0;
    // Optional warm-start upper bound; -1 means none.
    Time incumbent = -1;
};

struct ExactResult {
    Schedule schedule;
    Time makespan = 0;
    bool optimal = false;  // true iff the search ran to completion
    std::uint64_t nodes = 0;
};

// Exact optimum at desk scale (recommended n <= 9). Searches over the pairs
// (order of first operations on machine 1, order of second operations on
// machine 2); for each pair the tightest packing is an integer critical-path
// schedule, so enumerating pairs covers every schedule shape including ones
// that need deliberately inserted idle time. When node_limit is hit the best
// incumbent is returned with optimal = false, never silently.
ExactResult solve_exact(const Instance& inst, SearchConfig cfg = {});

// Ground truth for solve_exact: exhaustive enumeration of all integer start
// tuples in [0, horizon]^n. Capped at n <= 4 and horizon <= 60.
Time solve_exact_grid(const Instance& inst);

}  // namespace fsd
