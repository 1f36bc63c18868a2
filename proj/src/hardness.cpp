#include "fsd/hardness.hpp"

#include <algorithm>
#include <numeric>

namespace fsd {

Time PartitionInput::half_sum() const {
    Time total = 0;
    for (Time w : weights) total += w;
    return total / 2;
}

PartitionInput make_partition_input(std::vector<Time> weights, Time r) {
    Time total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0) {
            throw PreconditionError("weight " + std::to_string(i) + " is negative");
        }
        total += weights[i];
    }
    if (total % 2 != 0) {
        throw PreconditionError("weights must have an even total, got " + std::to_string(total));
    }
    const Time s = total / 2;
    if (r <= 5 * s) {
        throw PreconditionError("scale must satisfy R > 5S: R = " + std::to_string(r) +
                                ", 5S = " + std::to_string(5 * s));
    }
    return PartitionInput{std::move(weights), r};
}

Time yes_threshold(const PartitionInput& p) { return 4 * p.r + 4 * p.half_sum(); }

Time no_threshold(const PartitionInput& p) { return 5 * p.r - p.half_sum(); }

Instance generate(const PartitionInput& p) {
    const Time r = p.r;
    const Time s = p.half_sum();
    Instance inst;
    inst.jobs.reserve(p.weights.size() + 6);
    for (Time w : p.weights) inst.jobs.push_back({w, 2 * r, w});  // small jobs
    inst.jobs.push_back({r, 0, r});
    inst.jobs.push_back({r, 2 * r, r});
    inst.jobs.push_back({0, 0, r - s});
    inst.jobs.push_back({r - s, 0, 0});
    inst.jobs.push_back({0, 0, r});
    inst.jobs.push_back({r, 0, 0});
    return inst;
}

// Layout with the frame pinned at t0 = 0 (m = number of small jobs):
//   machine 1: [0,R) job m+2 | [R,2R) job m+1 | gap A = [2R,2R+S) | [2R+S,3R)
//              job m+4 | [3R,4R) job m+6
//   machine 2: [0,R) job m+5 | [R,2R-S) job m+3 | gap B = [2R-S,2R) | [2R,3R)
//              job m+1 | [3R,4R) job m+2
// The certificate jobs X fill gap A with their first operations, shortest
// first; their echoes land after 4R and stay disjoint exactly because the
// lengths never decrease. The complement Y fills gap B with its second
// operations mirrored (right to left, shortest first), pushing its first
// operations left of 0.
Schedule build_yes_schedule(const PartitionInput& p, const std::vector<int>& x) {
    const Time r = p.r;
    const Time s = p.half_sum();
    const int m = p.m();

    std::vector<char> in_x(static_cast<std::size_t>(m), 0);
    Time x_sum = 0;
    for (int k : x) {
        if (k < 0 || k >= m) {
            throw PreconditionError("certificate index " + std::to_string(k) + " out of range");
        }
        if (in_x[static_cast<std::size_t>(k)]) {
            throw PreconditionError("certificate index " + std::to_string(k) + " repeated");
        }
        in_x[static_cast<std::size_t>(k)] = 1;
        x_sum += p.weights[static_cast<std::size_t>(k)];
    }
    if (x_sum != s) {
        throw PreconditionError("certificate sums to " + std::to_string(x_sum) +
                                ", need S = " + std::to_string(s));
    }

    auto by_weight = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end(), [&](int i, int j) {
            return std::pair(p.weights[static_cast<std::size_t>(i)], i) <
                   std::pair(p.weights[static_cast<std::size_t>(j)], j);
        });
        return v;
    };
    std::vector<int> xs = by_weight(x);
    std::vector<int> ys;
    for (int k = 0; k < m; ++k) {
        if (!in_x[static_cast<std::size_t>(k)]) ys.push_back(k);
    }
    ys = by_weight(ys);

    Schedule sched;
    sched.start1.assign(static_cast<std::size_t>(m) + 6, 0);
    auto set = [&](int j, Time t) { sched.start1[static_cast<std::size_t>(j)] = t; };

    set(m + 0, r);          // m+1
    set(m + 1, 0);          // m+2
    set(m + 2, r);          // m+3: second op only, lands at [R, 2R-S)
    set(m + 3, 2 * r + s);  // m+4
    set(m + 4, 0);          // m+5: second op only, lands at [0, R)
    set(m + 5, 3 * r);      // m+6

    Time prefix = 0;  // X packs gap A left to right
    for (int k : xs) {
        set(k, 2 * r + prefix);
        prefix += p.weights[static_cast<std::size_t>(k)];
    }
    prefix = 0;  // Y packs gap B right to left; first ops cascade below 0
    for (int k : ys) {
        const Time w = p.weights[static_cast<std::size_t>(k)];
        set(k, -prefix - 2 * w);
        prefix += w;
    }
    return sched;
}

GapVerdict classify(const PartitionInput& p, Time claimed_optimal) {
    if (claimed_optimal <= yes_threshold(p)) return GapVerdict::AtMostYesThreshold;
    if (claimed_optimal >= no_threshold(p)) return GapVerdict::AtLeastNoThreshold;
    return GapVerdict::ForbiddenGap;
}

Rational ratio_bound(std::int64_t k) {
    if (k <= 5) {
        throw PreconditionError("ratio_bound needs k > 5 (so that R = kS satisfies R > 5S)");
    }
    std::int64_t num = 5 * k - 1;
    std::int64_t den = 4 * k + 4;
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

}  // namespace fsd
