#include "fsd/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fsd {

Instance::Instance(std::vector<Job> j) : jobs(std::move(j)) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].a < 0 || jobs[i].l < 0 || jobs[i].b < 0) {
            throw PreconditionError("job " + std::to_string(i) +
                                    ": a, l, b must be nonnegative");
        }
    }
}

Time Instance::total_a() const {
    Time s = 0;
    for (const Job& j : jobs) s += j.a;
    return s;
}

Time Instance::total_b() const {
    Time s = 0;
    for (const Job& j : jobs) s += j.b;
    return s;
}

Time Instance::max_job_span() const {
    Time m = 0;
    for (const Job& j : jobs) m = std::max(m, j.a + j.l + j.b);
    return m;
}

static void check_cover(const Instance& inst, const Schedule& sched) {
    if (sched.size() != inst.size()) {
        throw StructuralError("schedule covers " + std::to_string(sched.size()) +
                              " jobs, instance has " + std::to_string(inst.size()));
    }
}

std::vector<OpInterval> machine_ops(const Instance& inst, const Schedule& sched, int machine) {
    check_cover(inst, sched);
    std::vector<OpInterval> ops;
    ops.reserve(inst.jobs.size());
    for (int j = 0; j < inst.size(); ++j) {
        const Job& job = inst.job(j);
        const Time s1 = sched.start1[static_cast<std::size_t>(j)];
        if (machine == 1 && job.a > 0) {
            ops.push_back({s1, s1 + job.a, j});
        } else if (machine == 2 && job.b > 0) {
            const Time s2 = s1 + job.a + job.l;  // exact delay, by construction
            ops.push_back({s2, s2 + job.b, j});
        }
    }
    std::sort(ops.begin(), ops.end(), [](const OpInterval& x, const OpInterval& y) {
        return std::tie(x.begin, x.end, x.job) < std::tie(y.begin, y.end, y.job);
    });
    return ops;
}

Verdict validate(const Instance& inst, const Schedule& sched) {
    Verdict v;
    for (int machine : {1, 2}) {
        const std::vector<OpInterval> ops = machine_ops(inst, sched, machine);
        // sweep, keeping the interval with the furthest end seen so far
        const OpInterval* reach = nullptr;
        for (const OpInterval& op : ops) {
            if (reach != nullptr && op.begin < reach->end) {
                v.violations.push_back({machine, reach->job, op.job, op.begin,
                                        std::min(reach->end, op.end)});
            }
            if (reach == nullptr || op.end > reach->end) reach = &op;
        }
    }
    return v;
}

Time makespan(const Instance& inst, const Schedule& sched) {
    check_cover(inst, sched);
    Time lo = std::numeric_limits<Time>::max();
    Time hi = std::numeric_limits<Time>::min();
    bool any = false;
    for (int machine : {1, 2}) {
        for (const OpInterval& op : machine_ops(inst, sched, machine)) {
            lo = std::min(lo, op.begin);
            hi = std::max(hi, op.end);
            any = true;
        }
    }
    return any ? hi - lo : 0;
}

Schedule normalize(const Instance& inst, const Schedule& sched) {
    check_cover(inst, sched);
    Time lo = std::numeric_limits<Time>::max();
    bool any = false;
    for (int machine : {1, 2}) {
        for (const OpInterval& op : machine_ops(inst, sched, machine)) {
            lo = std::min(lo, op.begin);
            any = true;
        }
    }
    if (!any) return sched;
    Schedule out = sched;
    for (Time& s : out.start1) s -= lo;
    return out;
}

std::string describe(const Violation& v) {
    std::ostringstream os;
    os << "machine " << v.machine << ": jobs " << v.job_a << " and " << v.job_b
       << " overlap on [" << v.overlap_begin << ", " << v.overlap_end << ")";
    return os.str();
}

}  // namespace fsd
