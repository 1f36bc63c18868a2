#include "fsd/delays.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace fsd {

DelayClasses split_delay_classes(const Instance& inst) {
    DelayClasses out;
    bool have1 = false;
    bool have2 = false;
    for (int j = 0; j < inst.size(); ++j) {
        const Time l = inst.job(j).l;
        if (!have1 || l == out.l1) {
            have1 = true;
            out.l1 = l;
            out.jobs1.push_back(j);
        } else if (!have2 || l == out.l2) {
            have2 = true;
            out.l2 = l;
            out.jobs2.push_back(j);
        } else {
            throw PreconditionError(
                "more than two distinct delay values: job " + std::to_string(j) +
                " introduces a third value " + std::to_string(l) + " (already have " +
                std::to_string(out.l1) + " and " + std::to_string(out.l2) + ")");
        }
    }
    if (!have2) out.l2 = out.l1;
    if (have2 && out.l1 > out.l2) {
        std::swap(out.l1, out.l2);
        std::swap(out.jobs1, out.jobs2);
    }
    return out;
}

SolveResult solve_equal_delay(const Instance& inst) {
    const int n = inst.size();
    SolveResult out;
    out.schedule.start1.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) return out;

    const Time delay = inst.job(0).l;
    Instance projection;
    projection.jobs.reserve(inst.jobs.size());
    for (int j = 0; j < n; ++j) {
        const Job& job = inst.job(j);
        if (job.l != delay) {
            throw PreconditionError("mixed delays: job " + std::to_string(j) + " has l = " +
                                    std::to_string(job.l) + ", job 0 has l = " +
                                    std::to_string(delay));
        }
        projection.jobs.push_back({job.a, 0, job.b});
    }

    // Same first-operation starts work for any common delay: machine 1 is
    // untouched and every second operation moves right by the same amount.
    NowaitResult nw = solve_nowait_gg(projection);
    out.schedule = std::move(nw.schedule);
    out.schedule = normalize(inst, out.schedule);
    out.makespan = makespan(inst, out.schedule);
    return out;
}

namespace {

// Earliest nonempty-operation start, or nullopt when everything is empty.
std::optional<Time> earliest_start(const Instance& inst, const Schedule& sched) {
    Time lo = std::numeric_limits<Time>::max();
    bool any = false;
    for (int machine : {1, 2}) {
        for (const OpInterval& op : machine_ops(inst, sched, machine)) {
            lo = std::min(lo, op.begin);
            any = true;
        }
    }
    if (!any) return std::nullopt;
    return lo;
}

std::optional<Time> latest_end(const Instance& inst, const Schedule& sched) {
    Time hi = std::numeric_limits<Time>::min();
    bool any = false;
    for (int machine : {1, 2}) {
        for (const OpInterval& op : machine_ops(inst, sched, machine)) {
            hi = std::max(hi, op.end);
            any = true;
        }
    }
    if (!any) return std::nullopt;
    return hi;
}

}  // namespace

Concatenated concatenate(const Instance& ia, const Schedule& sa, const Instance& ib,
                         const Schedule& sb) {
    if (!validate(ia, sa).ok() || !validate(ib, sb).ok()) {
        throw PreconditionError("concatenate needs schedules that validate on their instances");
    }
    Concatenated out;
    out.instance.jobs = ia.jobs;
    out.instance.jobs.insert(out.instance.jobs.end(), ib.jobs.begin(), ib.jobs.end());

    const std::optional<Time> a_end = latest_end(ia, sa);
    const std::optional<Time> b_begin = earliest_start(ib, sb);
    // with an empty side there is nothing to separate; keep the other as is
    const Time shift = (a_end && b_begin) ? *a_end - *b_begin : 0;

    out.schedule.start1 = sa.start1;
    out.schedule.start1.reserve(sa.start1.size() + sb.start1.size());
    for (const Time s : sb.start1) out.schedule.start1.push_back(s + shift);
    return out;
}

SolveResult solve_concatenation(const Instance& inst) {
    const DelayClasses classes = split_delay_classes(inst);

    auto solve_class = [&inst](const std::vector<int>& members) {
        Instance sub;
        sub.jobs.reserve(members.size());
        for (int j : members) sub.jobs.push_back(inst.job(j));
        return solve_equal_delay(sub);
    };
    const SolveResult first = solve_class(classes.jobs1);
    const SolveResult second = solve_class(classes.jobs2);

    Instance sub1;
    for (int j : classes.jobs1) sub1.jobs.push_back(inst.job(j));
    Instance sub2;
    for (int j : classes.jobs2) sub2.jobs.push_back(inst.job(j));
    const std::optional<Time> a_end = latest_end(sub1, first.schedule);
    const std::optional<Time> b_begin = earliest_start(sub2, second.schedule);
    const Time shift = (a_end && b_begin) ? *a_end - *b_begin : 0;

    SolveResult out;
    out.schedule.start1.assign(inst.jobs.size(), 0);
    for (std::size_t k = 0; k < classes.jobs1.size(); ++k) {
        out.schedule.start1[static_cast<std::size_t>(classes.jobs1[k])] = first.schedule.start1[k];
    }
    for (std::size_t k = 0; k < classes.jobs2.size(); ++k) {
        out.schedule.start1[static_cast<std::size_t>(classes.jobs2[k])] =
            second.schedule.start1[k] + shift;
    }
    out.schedule = normalize(inst, out.schedule);
    out.makespan = makespan(inst, out.schedule);
    return out;
}

}  // namespace fsd
