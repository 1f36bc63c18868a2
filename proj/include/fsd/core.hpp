#pragma once

#include <cstdint>
#include <vector>

#include "fsd/errors.hpp"

namespace fsd {

using Time = std::int64_t;

// One job of the two-machine shop: a first operation of length `a` on machine
// 1, then an exact lag of `l` time units, then a second operation of length
// `b` on machine 2. All three are nonnegative integers.
struct Job {
    Time a = 0;
    Time l = 0;
    Time b = 0;

    friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
    std::vector<Job> jobs;

    Instance() = default;
    explicit Instance(std::vector<Job> j);

    int size() const { return static_cast<int>(jobs.size()); }
    const Job& job(int j) const { return jobs[static_cast<std::size_t>(j)]; }

    Time total_a() const;
    Time total_b() const;
    // max_j (a_j + l_j + b_j); 0 for an empty instance
    Time max_job_span() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// Start time of every job's first operation, indexed by job. The start of the
// second operation is never stored: it is start1[j] + a_j + l_j by
// construction, so delay exactness cannot be violated by any Schedule value.
// Starts may be negative; normalize() shifts a schedule back to time zero.
struct Schedule {
    std::vector<Time> start1;

    Schedule() = default;
    explicit Schedule(std::vector<Time> s) : start1(std::move(s)) {}

    int size() const { return static_cast<int>(start1.size()); }

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Closed-open execution interval of one nonempty operation.
struct OpInterval {
    Time begin = 0;
    Time end = 0;
    int job = -1;
};

struct Violation {
    int machine = 0;  // 1 or 2
    int job_a = -1;
    int job_b = -1;
    Time overlap_begin = 0;
    Time overlap_end = 0;
};

struct Verdict {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Nonempty operations of one machine (1 or 2), sorted by (begin, end, job).
// Zero-length operations occupy no machine time and are omitted.
std::vector<OpInterval> machine_ops(const Instance& inst, const Schedule& sched, int machine);

// Checks that on each machine the intervals of all nonempty operations are
// pairwise disjoint. Throws StructuralError if sched does not cover exactly
// the jobs of inst.
Verdict validate(const Instance& inst, const Schedule& sched);

// Latest completion minus earliest start over all nonempty operations.
// An instance with no nonempty operations has makespan 0.
Time makespan(const Instance& inst, const Schedule& sched);

// Shifts all starts by one constant so the earliest nonempty operation starts
// at time 0. Identity when there is no nonempty operation.
Schedule normalize(const Instance& inst, const Schedule& sched);

std::string describe(const Violation& v);

}  // namespace fsd
