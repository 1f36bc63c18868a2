#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsd/core.hpp"
#include "fsd/rng.hpp"

namespace fsd {

// a_j, b_j uniform in [pmin, pmax]; l_j a fair pick from {l1, l2}.
Instance random_instance(int n, Time l1, Time l2, Time pmin, Time pmax, SplitMix64& rng);

struct BenchOptions {
    int count = 0;
    int n = 0;
    Time l1 = 0;
    Time l2 = 0;
    Time pmin = 0;
    Time pmax = 0;
    std::uint64_t seed = 0;
    bool with_exact = false;  // allowed only for n <= 9
};

struct BenchRecord {
    std::string instance_id;
    int n = 0;
    Time l1 = 0;
    Time l2 = 0;
    Time concat = 0;
    Time lower_bound = 0;  // max(sum a, sum b, max_j(a+l+b))
    std::optional<Time> exact;
    std::int64_t ms_concat = 0;
    std::int64_t ms_exact = 0;
};

std::vector<BenchRecord> run_bench(const BenchOptions& opt);

// Fixed header:
// instance_id,n,L1,L2,concat,lb,exact,ratio_exact,ratio_lb,ms_concat,ms_exact
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace fsd
