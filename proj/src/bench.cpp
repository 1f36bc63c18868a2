#include "fsd/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "fsd/delays.hpp"
#include "fsd/exact.hpp"

namespace fsd {

Instance random_instance(int n, Time l1, Time l2, Time pmin, Time pmax, SplitMix64& rng) {
    Instance inst;
    inst.jobs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Time a = rng.uniform(pmin, pmax);
        const Time b = rng.uniform(pmin, pmax);
        const Time l = (rng.next() & 1u) ? l2 : l1;
        inst.jobs.push_back({a, l, b});
    }
    return inst;
}

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point from) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - from)
        .count();
}

std::string format_ratio(Time num, Time den) {
    if (den == 0) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opt) {
    if (opt.with_exact && opt.n > 9) {
        throw CapacityError("--with-exact is limited to n <= 9 (got n = " +
                            std::to_string(opt.n) + ")");
    }
    SplitMix64 rng(opt.seed);
    std::vector<BenchRecord> records;
    records.reserve(static_cast<std::size_t>(opt.count));
    for (int k = 0; k < opt.count; ++k) {
        const Instance inst = random_instance(opt.n, opt.l1, opt.l2, opt.pmin, opt.pmax, rng);
        BenchRecord rec;
        {
            std::ostringstream id;
            id << "s" << opt.seed << "-";
            id.fill('0');
            id.width(4);
            id << k;
            rec.instance_id = id.str();
        }
        rec.n = opt.n;
        rec.l1 = opt.l1;
        rec.l2 = opt.l2;
        rec.lower_bound = std::max({inst.total_a(), inst.total_b(), inst.max_job_span()});

        const auto t0 = std::chrono::steady_clock::now();
        rec.concat = solve_concatenation(inst).makespan;
        rec.ms_concat = elapsed_ms(t0);

        if (opt.with_exact) {
            const auto t1 = std::chrono::steady_clock::now();
            rec.exact = solve_exact(inst).makespan;
            rec.ms_exact = elapsed_ms(t1);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "instance_id,n,L1,L2,concat,lb,exact,ratio_exact,ratio_lb,ms_concat,ms_exact\n";
    for (const BenchRecord& r : records) {
        os << r.instance_id << "," << r.n << "," << r.l1 << "," << r.l2 << "," << r.concat << ","
           << r.lower_bound << ",";
        if (r.exact) {
            os << *r.exact << "," << format_ratio(r.concat, *r.exact) << ",";
        } else {
            os << ",,";
        }
        os << format_ratio(r.concat, r.lower_bound) << "," << r.ms_concat << ",";
        if (r.exact) os << r.ms_exact;
        os << "\n";
    }
    return os.str();
}

}  // namespace fsd
