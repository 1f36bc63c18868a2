#pragma once

#include <vector>

#include "fsd/core.hpp"

namespace fsd {

// Processing order of the jobs; a bijection on 0..n-1.
using Permutation = std::vector<int>;

struct NowaitEval {
    Time makespan = 0;
    Schedule schedule;  // left-shifted packing realizing the value
};

struct NowaitResult {
    Permutation order;
    Time makespan = 0;
    Schedule schedule;
};

// Makespan of the left-shifted packing of `perm` for a zero-delay instance:
//   sum(a) + b_last + sum over consecutive pairs of max(0, b_prev - a_next).
// Also returns the realizing schedule, which always validates.
NowaitEval nowait_makespan(const Instance& inst, const Permutation& perm);

// Exact O(n log n) solver for the two-machine no-wait shop (all l_j = 0):
// sorted-rank matching on a/b values plus cycle patching by cheapest
// adjacent-rank interchanges. Deterministic: ties go to the lower job index.
NowaitResult solve_nowait_gg(const Instance& inst);

// Exact oracle: bitmask DP over (job subset, last job). Capped at n <= 20.
NowaitResult solve_nowait_dp(const Instance& inst);

// Exact oracle: full enumeration of all n! orders. Capped at n <= 9.
NowaitResult solve_nowait_brute(const Instance& inst);

}  // namespace fsd
