// fsd: solvers, generators, and reporting tools for the two-machine flow shop
// with exact delays. File formats: .fsd instances, .sched schedules.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsd/bench.hpp"
#include "fsd/core.hpp"
#include "fsd/delays.hpp"
#include "fsd/exact.hpp"
#include "fsd/gantt.hpp"
#include "fsd/hardness.hpp"
#include "fsd/io.hpp"
#include "fsd/nowait.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        fsd::write_file(out_path, content);
    }
}

std::string default_sched_path(const std::string& input) {
    const std::string ext = ".fsd";
    if (input.size() > ext.size() && input.substr(input.size() - ext.size()) == ext) {
        return input.substr(0, input.size() - ext.size()) + ".sched";
    }
    return input + ".sched";
}

std::string join_times(const std::vector<fsd::Time>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

// first subset of weights summing to S, by ascending bitmask; nullopt if none
std::optional<std::vector<int>> find_certificate(const fsd::PartitionInput& p) {
    const int m = p.m();
    if (m > 24) throw fsd::CapacityError("certificate search is capped at m <= 24");
    const fsd::Time s = p.half_sum();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        fsd::Time sum = 0;
        for (int k = 0; k < m; ++k) {
            if (mask & (1u << k)) sum += p.weights[static_cast<std::size_t>(k)];
        }
        if (sum == s) {
            std::vector<int> x;
            for (int k = 0; k < m; ++k) {
                if (mask & (1u << k)) x.push_back(k);
            }
            return x;
        }
    }
    return std::nullopt;
}

}  // namespace

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"two-machine flow shop with exact delays"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    std::string solve_alg;
    std::string solve_input;
    std::string solve_output;
    std::uint64_t solve_node_limit = 0;
    solve->add_option("--alg", solve_alg, "concat | exact | nowait-gg")->required();
    solve->add_option("input", solve_input, "instance file (.fsd)")->required();
    solve->add_option("-o,--output", solve_output, "schedule file (default: input with .sched)");
    solve->add_option("--node-limit", solve_node_limit, "node cap for --alg exact (0 = none)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate instance files");
    gen->require_subcommand(1);
    auto* gen_hardness = gen->add_subcommand("hardness", "partition gap instance");
    std::vector<fsd::Time> gh_weights;
    fsd::Time gh_r = 0;
    std::string gh_output;
    std::string gh_yes_sched;
    std::vector<int> gh_subset;
    gen_hardness->add_option("--weights", gh_weights, "comma-separated weights")
        ->required()
        ->delimiter(',');
    gen_hardness->add_option("--R", gh_r, "scale, must exceed 5S")->required();
    gen_hardness->add_option("-o,--output", gh_output, "instance file (default: stdout)");
    gen_hardness->add_option("--yes-sched", gh_yes_sched,
                             "also write the certificate schedule to this file");
    gen_hardness->add_option("--subset", gh_subset, "certificate indices for --yes-sched")
        ->delimiter(',');

    auto* gen_random = gen->add_subcommand("random", "seeded random instance");
    int gr_n = 0;
    std::vector<fsd::Time> gr_delays;
    fsd::Time gr_pmax = 0;
    fsd::Time gr_pmin = 0;
    std::uint64_t gr_seed = 0;
    std::string gr_output;
    gen_random->add_option("--n", gr_n, "number of jobs")->required();
    gen_random->add_option("--delays", gr_delays, "two delay values L1,L2")->required()->delimiter(',');
    gen_random->add_option("--pmax", gr_pmax, "a, b drawn from [pmin, pmax]")->required();
    gen_random->add_option("--pmin", gr_pmin, "lower bound for a, b (default 0)");
    gen_random->add_option("--seed", gr_seed, "PRNG seed (SplitMix64)")->required();
    gen_random->add_option("-o,--output", gr_output, "instance file (default: stdout)");

    // gantt
    auto* gantt = app.add_subcommand("gantt", "render a schedule as SVG");
    std::string gantt_instance;
    std::string gantt_schedule;
    std::string gantt_output;
    gantt->add_option("instance", gantt_instance, "instance file (.fsd)")->required();
    gantt->add_option("schedule", gantt_schedule, "schedule file (.sched)")->required();
    gantt->add_option("-o,--output", gantt_output, "SVG file (default: stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "CSV benchmark of the concatenation solver");
    fsd::BenchOptions bopt;
    std::vector<fsd::Time> bench_delays;
    std::string bench_output;
    bench->add_option("--count", bopt.count, "number of instances")->required();
    bench->add_option("--n", bopt.n, "jobs per instance")->required();
    bench->add_option("--delays", bench_delays, "two delay values L1,L2")->required()->delimiter(',');
    bench->add_option("--pmax", bopt.pmax, "a, b drawn from [pmin, pmax]")->required();
    bench->add_option("--pmin", bopt.pmin, "lower bound for a, b (default 0)");
    bench->add_option("--seed", bopt.seed, "PRNG seed (SplitMix64)")->required();
    bench->add_flag("--with-exact", bopt.with_exact, "also run the exact solver (n <= 9)");
    bench->add_option("-o,--output", bench_output, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            const fsd::Instance inst = fsd::parse_instance(fsd::read_file(solve_input));
            for (const std::string& w : fsd::instance_warnings(inst)) {
                std::cerr << "warning: " << w << "\n";
            }
            fsd::Schedule sched;
            fsd::Time value = 0;
            bool optimal = false;
            if (solve_alg == "concat") {
                fsd::SolveResult r = fsd::solve_concatenation(inst);
                sched = std::move(r.schedule);
                value = r.makespan;
            } else if (solve_alg == "exact") {
                fsd::SearchConfig cfg;
                cfg.node_limit = solve_node_limit;
                fsd::ExactResult r = fsd::solve_exact(inst, cfg);
                sched = std::move(r.schedule);
                value = r.makespan;
                optimal = r.optimal;
            } else if (solve_alg == "nowait-gg") {
                fsd::NowaitResult r = fsd::solve_nowait_gg(inst);
                sched = std::move(r.schedule);
                value = r.makespan;
                optimal = true;
            } else {
                std::cerr << "error: unknown algorithm '" << solve_alg
                          << "' (expected concat, exact, or nowait-gg)\n";
                return kExitUsage;
            }
            const std::string out =
                solve_output.empty() ? default_sched_path(solve_input) : solve_output;
            fsd::write_file(out, fsd::format_schedule(inst, sched));
            std::cout << "alg=" << solve_alg << " makespan=" << value << " optimal="
                      << (optimal ? "true" : "false") << "\n";
        } else if (gen_hardness->parsed()) {
            const fsd::PartitionInput p = fsd::make_partition_input(gh_weights, gh_r);
            const fsd::Instance inst = fsd::generate(p);
            emit(gh_output, fsd::format_instance(
                                inst, "gen hardness --weights " + join_times(gh_weights) +
                                          " --R " + std::to_string(gh_r)));
            if (!gh_yes_sched.empty()) {
                std::vector<int> x;
                if (gen_hardness->count("--subset") > 0) {
                    x = gh_subset;
                } else {
                    const auto found = find_certificate(p);
                    if (!found) {
                        std::cerr << "error: no subset of the weights sums to S = "
                                  << p.half_sum() << "; there is no certificate schedule\n";
                        return kExitInvalid;
                    }
                    x = *found;
                }
                const fsd::Schedule yes = fsd::build_yes_schedule(p, x);
                fsd::write_file(gh_yes_sched, fsd::format_schedule(inst, yes));
            }
        } else if (gen_random->parsed()) {
            if (gr_delays.size() != 2) {
                std::cerr << "error: --delays needs exactly two values, got "
                          << gr_delays.size() << "\n";
                return kExitUsage;
            }
            fsd::SplitMix64 rng(gr_seed);
            const fsd::Instance inst =
                fsd::random_instance(gr_n, gr_delays[0], gr_delays[1], gr_pmin, gr_pmax, rng);
            emit(gr_output,
                 fsd::format_instance(inst, "gen random --n " + std::to_string(gr_n) +
                                                " --delays " + join_times(gr_delays) +
                                                " --pmax " + std::to_string(gr_pmax) +
                                                " --pmin " + std::to_string(gr_pmin) +
                                                " --seed " + std::to_string(gr_seed)));
        } else if (gantt->parsed()) {
            const fsd::Instance inst = fsd::parse_instance(fsd::read_file(gantt_instance));
            const fsd::Schedule sched =
                fsd::parse_schedule(fsd::read_file(gantt_schedule), inst);
            emit(gantt_output, fsd::render_gantt(inst, sched));
        } else if (bench->parsed()) {
            if (bench_delays.size() != 2) {
                std::cerr << "error: --delays needs exactly two values, got "
                          << bench_delays.size() << "\n";
                return kExitUsage;
            }
            bopt.l1 = bench_delays[0];
            bopt.l2 = bench_delays[1];
            emit(bench_output, fsd::bench_csv(fsd::run_bench(bopt)));
        }
    } catch (const fsd::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const fsd::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const fsd::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const fsd::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
