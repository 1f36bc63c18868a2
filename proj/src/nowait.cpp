#include "fsd/nowait.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fsd {

namespace {

void require_zero_delays(const Instance& inst) {
    for (int j = 0; j < inst.size(); ++j) {
        if (inst.job(j).l != 0) {
            throw PreconditionError("job " + std::to_string(j) + " has nonzero delay " +
                                    std::to_string(inst.job(j).l) +
                                    "; the no-wait solvers need l_j = 0");
        }
    }
}

void require_permutation(const Instance& inst, const Permutation& perm) {
    if (static_cast<int>(perm.size()) != inst.size()) {
        throw StructuralError("permutation size does not match instance");
    }
    std::vector<char> seen(perm.size(), 0);
    for (int j : perm) {
        if (j < 0 || j >= inst.size() || seen[static_cast<std::size_t>(j)]) {
            throw StructuralError("order is not a permutation of the job indices");
        }
        seen[static_cast<std::size_t>(j)] = 1;
    }
}

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[static_cast<std::size_t>(x)] = y;
        return true;
    }
};

}  // namespace

NowaitEval nowait_makespan(const Instance& inst, const Permutation& perm) {
    require_zero_delays(inst);
    require_permutation(inst, perm);
    const int n = inst.size();
    NowaitEval out;
    out.schedule.start1.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) return out;

    Time total_a = 0;
    Time idle = 0;
    Time t = 0;
    for (int k = 0; k < n; ++k) {
        const Job& cur = inst.job(perm[static_cast<std::size_t>(k)]);
        total_a += cur.a;
        out.schedule.start1[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = t;
        if (k + 1 < n) {
            const Job& nxt = inst.job(perm[static_cast<std::size_t>(k + 1)]);
            const Time gap = std::max<Time>(0, cur.b - nxt.a);
            idle += gap;
            t += cur.a + gap;
        }
    }
    out.makespan = total_a + inst.job(perm.back()).b + idle;
    return out;
}

// Sorted-rank matching plus cycle patching. Nodes are the jobs plus one dummy
// with a = b = 0 that closes the tour; arc cost i -> j is max(0, b_i - a_j).
// Matching the k-th smallest b with the k-th smallest a minimizes the
// assignment; if it splits into several cycles, merge them with a cheapest
// spanning set of adjacent-rank interchanges. Interchange j costs
//   max(0, min(beta[j+1], alpha[j+1]) - max(beta[j], alpha[j]))
// and the set must be applied in a specific order for the costs to add up:
// first the interchanges whose rank-(j+1) pair has beta > alpha, in ascending
// rank order, then the rest in descending rank order.
NowaitResult solve_nowait_gg(const Instance& inst) {
    require_zero_delays(inst);
    const int n = inst.size();
    NowaitResult out;
    if (n == 0) {
        out.schedule.start1.clear();
        return out;
    }

    const int m = n + 1;  // node 0 is the dummy; node i is job i-1
    auto a_of = [&](int node) -> Time { return node == 0 ? 0 : inst.job(node - 1).a; };
    auto b_of = [&](int node) -> Time { return node == 0 ? 0 : inst.job(node - 1).b; };

    std::vector<int> brank(static_cast<std::size_t>(m));
    std::vector<int> arank(static_cast<std::size_t>(m));
    std::iota(brank.begin(), brank.end(), 0);
    std::iota(arank.begin(), arank.end(), 0);
    std::sort(brank.begin(), brank.end(),
              [&](int x, int y) { return std::pair(b_of(x), x) < std::pair(b_of(y), y); });
    std::sort(arank.begin(), arank.end(),
              [&](int x, int y) { return std::pair(a_of(x), x) < std::pair(a_of(y), y); });

    std::vector<int> succ(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        succ[static_cast<std::size_t>(brank[static_cast<std::size_t>(k)])] =
            arank[static_cast<std::size_t>(k)];
    }

    Dsu cycles(m);
    int ncomp = m;
    for (int i = 0; i < m; ++i) {
        if (cycles.unite(i, succ[static_cast<std::size_t>(i)])) --ncomp;
    }

    if (ncomp > 1) {
        auto beta = [&](int k) { return b_of(brank[static_cast<std::size_t>(k)]); };
        auto alpha = [&](int k) { return a_of(arank[static_cast<std::size_t>(k)]); };

        std::vector<std::pair<Time, int>> edges;  // (cost, rank)
        edges.reserve(static_cast<std::size_t>(m - 1));
        for (int k = 0; k + 1 < m; ++k) {
            const Time d = std::max<Time>(
                0, std::min(beta(k + 1), alpha(k + 1)) - std::max(beta(k), alpha(k)));
            edges.emplace_back(d, k);
        }
        std::sort(edges.begin(), edges.end());

        Dsu merged(m);
        std::vector<int> chosen;
        for (const auto& [d, k] : edges) {
            const int u = cycles.find(brank[static_cast<std::size_t>(k)]);
            const int v = cycles.find(brank[static_cast<std::size_t>(k + 1)]);
            if (merged.unite(u, v)) chosen.push_back(k);
        }

        std::sort(chosen.begin(), chosen.end());
        std::vector<int> order;
        order.reserve(chosen.size());
        for (int k : chosen) {  // "down" interchanges, ascending
            if (beta(k + 1) > alpha(k + 1)) order.push_back(k);
        }
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {  // rest, descending
            if (beta(*it + 1) <= alpha(*it + 1)) order.push_back(*it);
        }
        for (int k : order) {
            std::swap(succ[static_cast<std::size_t>(brank[static_cast<std::size_t>(k)])],
                      succ[static_cast<std::size_t>(brank[static_cast<std::size_t>(k + 1)])]);
        }
    }

    out.order.reserve(static_cast<std::size_t>(n));
    for (int node = succ[0]; node != 0; node = succ[static_cast<std::size_t>(node)]) {
        out.order.push_back(node - 1);
    }
    NowaitEval eval = nowait_makespan(inst, out.order);
    out.makespan = eval.makespan;
    out.schedule = std::move(eval.schedule);
    return out;
}

NowaitResult solve_nowait_dp(const Instance& inst) {
    require_zero_delays(inst);
    const int n = inst.size();
    if (n > 20) {
        throw CapacityError("solve_nowait_dp is capped at n <= 20 (got n = " +
                            std::to_string(n) + ")");
    }
    NowaitResult out;
    if (n == 0) return out;

    // cost(mask, last) = min idle of a chain over `mask` ending at `last`
    const std::size_t size = (1ull << n) * static_cast<std::size_t>(n);
    constexpr Time kInf = std::numeric_limits<Time>::max() / 4;
    std::vector<Time> cost(size, kInf);
    std::vector<std::int8_t> parent(size, -1);
    auto at = [n](std::uint32_t mask, int last) {
        return static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(last);
    };
    for (int j = 0; j < n; ++j) cost[at(1u << j, j)] = 0;

    const std::uint32_t full = static_cast<std::uint32_t>((1ull << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (int last = 0; last < n; ++last) {
            if (!(mask & (1u << last))) continue;
            const Time c = cost[at(mask, last)];
            if (c >= kInf) continue;
            for (int nxt = 0; nxt < n; ++nxt) {
                if (mask & (1u << nxt)) continue;
                const Time c2 =
                    c + std::max<Time>(0, inst.job(last).b - inst.job(nxt).a);
                const std::size_t idx = at(mask | (1u << nxt), nxt);
                if (c2 < cost[idx]) {
                    cost[idx] = c2;
                    parent[idx] = static_cast<std::int8_t>(last);
                }
            }
        }
    }

    int best_last = 0;
    Time best = kInf;
    for (int last = 0; last < n; ++last) {
        const Time c = cost[at(full, last)] + inst.job(last).b;
        if (c < best) {
            best = c;
            best_last = last;
        }
    }

    Permutation rev;
    std::uint32_t mask = full;
    int cur = best_last;
    while (cur >= 0) {
        rev.push_back(cur);
        const int prev = parent[at(mask, cur)];
        mask &= ~(1u << cur);
        cur = prev;
    }
    out.order.assign(rev.rbegin(), rev.rend());
    NowaitEval eval = nowait_makespan(inst, out.order);
    out.makespan = eval.makespan;
    out.schedule = std::move(eval.schedule);
    return out;
}

NowaitResult solve_nowait_brute(const Instance& inst) {
    require_zero_delays(inst);
    const int n = inst.size();
    if (n > 9) {
        throw CapacityError("solve_nowait_brute is capped at n <= 9 (got n = " +
                            std::to_string(n) + ")");
    }
    NowaitResult out;
    if (n == 0) return out;

    Permutation perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Time best = std::numeric_limits<Time>::max();
    Permutation best_perm;
    do {
        const Time c = nowait_makespan(inst, perm).makespan;
        if (c < best) {
            best = c;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    out.order = std::move(best_perm);
    NowaitEval eval = nowait_makespan(inst, out.order);
    out.makespan = eval.makespan;
    out.schedule = std::move(eval.schedule);
    return out;
}

}  // namespace fsd
