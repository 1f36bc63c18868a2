#include "fsd/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fsd/delays.hpp"

namespace fsd {

namespace {

constexpr Time kNegInf = std::numeric_limits<Time>::min() / 4;
constexpr Time kInf = std::numeric_limits<Time>::max() / 4;

// Enumerates pairs (order of machine-1 operations, order of machine-2
// operations). Any feasible schedule induces such a pair, and for a fixed
// pair the tightest packing is the critical-path solution of the difference
// constraints
//   s_v >= s_u + a_u                          (u right before v on machine 1)
//   s_v >= s_u + (a_u + l_u + b_u) - (a_v + l_v)   (u right before v on machine 2)
// which is integral for integer data. Jobs of the same delay class are forced
// onto machine 2 in their machine-1 order, which cuts the second enumeration
// down to the free interleavings.
class PairSearch {
  public:
    PairSearch(const Instance& inst, const SearchConfig& cfg) : inst_(inst), cfg_(cfg) {
        const int n = inst.size();
        for (int j = 0; j < n; ++j) {
            if (inst.job(j).a > 0) m1_jobs_.push_back(j);
            if (inst.job(j).b > 0) m2_jobs_.push_back(j);
            if (inst.job(j).a > 0 || inst.job(j).b > 0) active_.push_back(j);
        }
        slot_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < active_.size(); ++i) {
            slot_[static_cast<std::size_t>(active_[i])] = static_cast<int>(i);
        }

        // warm start: back-to-back schedule, improved by the two-delay
        // approximation when the instance has at most two delay values
        Schedule seq;
        seq.start1.assign(static_cast<std::size_t>(n), 0);
        Time t = 0;
        for (int j : active_) {
            seq.start1[static_cast<std::size_t>(j)] = t;
            t += inst.job(j).a + inst.job(j).l + inst.job(j).b;
        }
        consider(seq, makespan(inst_, seq));
        try {
            SolveResult approx = solve_concatenation(inst_);
            consider(approx.schedule, approx.makespan);
        } catch (const PreconditionError&) {
            // three or more delay values: keep the sequential warm start
        }
    }

    ExactResult run() {
        if (active_.empty()) {
            ExactResult out;
            out.schedule.start1.assign(inst_.jobs.size(), 0);
            out.makespan = 0;
            out.optimal = true;
            out.nodes = 0;
            return out;
        }
        order1_.clear();
        used1_.assign(inst_.jobs.size(), 0);
        branch_m1();

        ExactResult out;
        out.schedule = normalize(inst_, best_schedule_);
        out.makespan = best_makespan_;
        out.optimal = !aborted_;
        out.nodes = nodes_;
        return out;
    }

  private:
    void consider(const Schedule& sched, Time value) {
        if (value < best_makespan_) {
            best_makespan_ = value;
            best_schedule_ = sched;
        }
    }

    // prune threshold: the best schedule found so far, a caller-supplied
    // incumbent, and the horizon all cap what is still interesting
    Time bound() const {
        Time b = best_makespan_;
        if (cfg_.incumbent >= 0) b = std::min(b, cfg_.incumbent);
        b = std::min(b, cfg_.horizon + 1);
        return b;
    }

    bool tick() {
        ++nodes_;
        if (cfg_.node_limit != 0 && nodes_ > cfg_.node_limit) aborted_ = true;
        return !aborted_;
    }

    // identical jobs enter the machine-1 order by ascending index, which is
    // the same as forcing nondecreasing starts among them
    bool duplicate_skip(const std::vector<int>& pool, const std::vector<char>& used,
                        int j) const {
        for (int i : pool) {
            if (i == j) break;
            if (!used[static_cast<std::size_t>(i)] && inst_.job(i) == inst_.job(j)) return true;
        }
        return false;
    }

    void branch_m1() {
        if (aborted_) return;
        if (order1_.size() == m1_jobs_.size()) {
            prepare_forced();
            order2_.clear();
            used2_.assign(inst_.jobs.size(), 0);
            branch_m2();
            return;
        }
        for (int j : m1_jobs_) {
            if (used1_[static_cast<std::size_t>(j)]) continue;
            if (duplicate_skip(m1_jobs_, used1_, j)) continue;
            used1_[static_cast<std::size_t>(j)] = 1;
            order1_.push_back(j);
            branch_m1();
            order1_.pop_back();
            used1_[static_cast<std::size_t>(j)] = 0;
            if (aborted_) return;
        }
    }

    // u before v on machine 1 forces u before v on machine 2 when l_v >= l_u:
    // the machine-2 starts then differ by at least a_v > 0.
    void prepare_forced() {
        const std::size_t n = inst_.jobs.size();
        forced_.assign(n * n, 0);
        for (std::size_t x = 0; x < order1_.size(); ++x) {
            const int u = order1_[x];
            if (inst_.job(u).b == 0) continue;
            for (std::size_t y = x + 1; y < order1_.size(); ++y) {
                const int v = order1_[y];
                if (inst_.job(v).b == 0) continue;
                if (inst_.job(v).l >= inst_.job(u).l) {
                    forced_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
                }
            }
        }
    }

    bool eligible(int j) const {
        const std::size_t n = inst_.jobs.size();
        for (int i : m2_jobs_) {
            if (i == j || used2_[static_cast<std::size_t>(i)]) continue;
            if (forced_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)]) {
                return false;
            }
        }
        return true;
    }

    void branch_m2() {
        if (aborted_) return;
        if (order2_.size() == m2_jobs_.size()) {
            evaluate_pair();
            return;
        }
        for (int j : m2_jobs_) {
            if (used2_[static_cast<std::size_t>(j)]) continue;
            if (!eligible(j)) continue;
            if (duplicate_skip(m2_jobs_, used2_, j)) continue;
            used2_[static_cast<std::size_t>(j)] = 1;
            order2_.push_back(j);
            branch_m2();
            order2_.pop_back();
            used2_[static_cast<std::size_t>(j)] = 0;
            if (aborted_) return;
        }
    }

    void evaluate_pair() {
        if (!tick()) return;
        const int k = static_cast<int>(active_.size());
        dist_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), kNegInf);
        auto at = [k](int i, int j) {
            return static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(j);
        };
        for (int i = 0; i < k; ++i) dist_[at(i, i)] = 0;
        auto add_edge = [&](int u, int v, Time w) {
            const int iu = slot_[static_cast<std::size_t>(u)];
            const int iv = slot_[static_cast<std::size_t>(v)];
            dist_[at(iu, iv)] = std::max(dist_[at(iu, iv)], w);
        };
        for (std::size_t x = 0; x + 1 < order1_.size(); ++x) {
            add_edge(order1_[x], order1_[x + 1], inst_.job(order1_[x]).a);
        }
        for (std::size_t x = 0; x + 1 < order2_.size(); ++x) {
            const Job& u = inst_.job(order2_[x]);
            const Job& v = inst_.job(order2_[x + 1]);
            add_edge(order2_[x], order2_[x + 1], (u.a + u.l + u.b) - (v.a + v.l));
        }
        for (int mid = 0; mid < k; ++mid) {
            for (int i = 0; i < k; ++i) {
                const Time dim = dist_[at(i, mid)];
                if (dim == kNegInf) continue;
                for (int j = 0; j < k; ++j) {
                    const Time dmj = dist_[at(mid, j)];
                    if (dmj != kNegInf && dim + dmj > dist_[at(i, j)]) {
                        dist_[at(i, j)] = dim + dmj;
                    }
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            if (dist_[at(i, i)] > 0) return;  // the two orders contradict each other
        }

        // offsets of a job's first start and last end relative to s_j
        auto start_off = [&](int j) {
            return inst_.job(j).a > 0 ? Time{0} : inst_.job(j).a + inst_.job(j).l;
        };
        auto end_off = [&](int j) {
            const Job& job = inst_.job(j);
            return job.b > 0 ? job.a + job.l + job.b : job.a;
        };
        Time span = 0;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                if (dist_[at(i, j)] == kNegInf) continue;
                span = std::max(span, dist_[at(i, j)] + end_off(active_[static_cast<std::size_t>(j)]) -
                                          start_off(active_[static_cast<std::size_t>(i)]));
            }
        }
        if (span >= bound()) return;

        // realize the packing: s_i = -(longest tail from i)
        Schedule sched;
        sched.start1.assign(inst_.jobs.size(), 0);
        for (int i = 0; i < k; ++i) {
            Time tail = kNegInf;
            for (int j = 0; j < k; ++j) {
                if (dist_[at(i, j)] == kNegInf) continue;
                tail = std::max(tail, dist_[at(i, j)] + end_off(active_[static_cast<std::size_t>(j)]));
            }
            sched.start1[static_cast<std::size_t>(active_[static_cast<std::size_t>(i)])] = -tail;
        }
        consider(sched, span);
    }

    const Instance& inst_;
    SearchConfig cfg_;
    std::vector<int> m1_jobs_;
    std::vector<int> m2_jobs_;
    std::vector<int> active_;
    std::vector<int> slot_;

    std::vector<int> order1_;
    std::vector<int> order2_;
    std::vector<char> used1_;
    std::vector<char> used2_;
    std::vector<char> forced_;
    std::vector<Time> dist_;

    Schedule best_schedule_;
    Time best_makespan_ = kInf;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

ExactResult solve_exact(const Instance& inst, SearchConfig cfg) {
    if (cfg.horizon < 0) {
        cfg.horizon = 0;
        for (const Job& j : inst.jobs) cfg.horizon += j.a + j.l + j.b;
    }
    PairSearch search(inst, cfg);
    return search.run();
}

Time solve_exact_grid(const Instance& inst) {
    const int n = inst.size();
    if (n == 0) return 0;
    if (n > 4) {
        throw CapacityError("solve_exact_grid is capped at n <= 4 (got n = " +
                            std::to_string(n) + ")");
    }
    Time horizon = 0;
    for (const Job& j : inst.jobs) horizon += j.a + j.l + j.b;
    if (horizon > 60) {
        throw CapacityError("solve_exact_grid is capped at horizon <= 60 (got " +
                            std::to_string(horizon) + ")");
    }

    Schedule sched;
    sched.start1.assign(static_cast<std::size_t>(n), 0);
    Time best = kInf;

    // place jobs one by one, rejecting partial overlaps early
    auto overlaps = [&](int placed, int j) {
        const Job& job = inst.job(j);
        const Time s1 = sched.start1[static_cast<std::size_t>(j)];
        for (int i = 0; i < placed; ++i) {
            const Job& other = inst.job(i);
            const Time o1 = sched.start1[static_cast<std::size_t>(i)];
            if (job.a > 0 && other.a > 0 && s1 < o1 + other.a && o1 < s1 + job.a) return true;
            const Time s2 = s1 + job.a + job.l;
            const Time o2 = o1 + other.a + other.l;
            if (job.b > 0 && other.b > 0 && s2 < o2 + other.b && o2 < s2 + job.b) return true;
        }
        return false;
    };

    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            best = std::min(best, makespan(inst, sched));
            return;
        }
        for (Time s = 0; s <= horizon; ++s) {
            sched.start1[static_cast<std::size_t>(j)] = s;
            if (!overlaps(j, j)) self(self, j + 1);
        }
    };
    rec(rec, 0);
    return best == kInf ? 0 : best;
}

}  // namespace fsd
