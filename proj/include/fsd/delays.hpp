#pragma once

#include "fsd/core.hpp"
#include "fsd/nowait.hpp"

namespace fsd {

// Partition of the jobs by delay value, at most two distinct values allowed.
// l1 <= l2; when all jobs share one delay the second class is empty.
struct DelayClasses {
    Time l1 = 0;
    Time l2 = 0;
    std::vector<int> jobs1;
    std::vector<int> jobs2;
};

// Throws PreconditionError naming the third value if more than two distinct
// delays occur.
DelayClasses split_delay_classes(const Instance& inst);

struct SolveResult {
    Schedule schedule;
    Time makespan = 0;
};

// Exact-delay instance with one common delay L: solve the zero-delay
// projection with solve_nowait_gg and keep its first-operation starts; the
// second operations land L later. When every a_j >= 1 and b_j >= 1 the result
// is optimal and its makespan is the no-wait optimum plus L. With zero-length
// operations the schedule is still feasible but both claims can fail (the
// one-op jobs may float); see the boundary tests.
SolveResult solve_equal_delay(const Instance& inst);

struct Concatenated {
    Instance instance;  // jobs of `a` then jobs of `b` (indices offset by |a|)
    Schedule schedule;
};

// Runs schedule `b` immediately after schedule `a`: `b` is shifted so its
// earliest operation starts at the latest completion of `a`. Makespan of the
// result is exactly makespan(a) + makespan(b). An empty side is the identity.
Concatenated concatenate(const Instance& ia, const Schedule& sa,
                         const Instance& ib, const Schedule& sb);

// Two-delay approximation: split into delay classes, solve each class with
// solve_equal_delay, run the smaller-delay class first and the other one
// right after it. O(n log n) overall.
SolveResult solve_concatenation(const Instance& inst);

}  // namespace fsd
