// Process-level checks of the fsd binary: exit codes, summary lines,
// deterministic generator output.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "fsd/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(FSD_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
        res.output += buf.data();
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "fsd_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string path(const std::string& name) { return (temp_dir() / name).string(); }

}  // namespace

TEST_CASE("solve: concat and exact on the two-delay example") {
    fsd::write_file(path("two.fsd"), "2\n1 6 1\n2 0 2\n");
    const RunResult concat =
        run("solve --alg concat " + path("two.fsd") + " -o " + path("two_c.sched"));
    CHECK(concat.exit_code == 0);
    CHECK(concat.output.find("alg=concat makespan=12 optimal=false") != std::string::npos);

    const RunResult exact =
        run("solve --alg exact " + path("two.fsd") + " -o " + path("two_e.sched"));
    CHECK(exact.exit_code == 0);
    CHECK(exact.output.find("alg=exact makespan=8 optimal=true") != std::string::npos);

    // both written schedules parse and are normalized
    const fsd::Instance inst = fsd::parse_instance(fsd::read_file(path("two.fsd")));
    for (const char* name : {"two_c.sched", "two_e.sched"}) {
        const fsd::Schedule s = fsd::parse_schedule(fsd::read_file(path(name)), inst);
        CHECK(fsd::validate(inst, s).ok());
        CHECK(s == fsd::normalize(inst, s));
    }
}

TEST_CASE("solve: nowait-gg guards against nonzero delays") {
    fsd::write_file(path("mixed.fsd"), "2\n1 6 1\n2 0 2\n");
    const RunResult res = run("solve --alg nowait-gg " + path("mixed.fsd"));
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("nonzero delay") != std::string::npos);

    fsd::write_file(path("zero.fsd"), "2\n2 0 3\n4 0 1\n");
    const RunResult ok =
        run("solve --alg nowait-gg " + path("zero.fsd") + " -o " + path("zero.sched"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("makespan=7 optimal=true") != std::string::npos);
}

TEST_CASE("solve: malformed input exits 2 with position info") {
    fsd::write_file(path("bad.fsd"), "1\n1 x 1\n");
    const RunResult res = run("solve --alg concat " + path("bad.fsd"));
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("2:3") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("solve " + path("two.fsd")).exit_code == 1);        // missing --alg
    CHECK(run("frobnicate").exit_code == 1);                      // unknown subcommand
    CHECK(run("gen random --n 3 --delays 0,5 --pmax 4").exit_code == 1);  // missing seed
}

TEST_CASE("gen hardness: instance, guard, and certificate schedule") {
    const RunResult res = run("gen hardness --weights 1,1 --R 6 -o " + path("h.fsd") +
                              " --yes-sched " + path("h.sched"));
    CHECK(res.exit_code == 0);
    const fsd::Instance inst = fsd::parse_instance(fsd::read_file(path("h.fsd")));
    CHECK(inst.size() == 8);
    const fsd::Schedule yes = fsd::parse_schedule(fsd::read_file(path("h.sched")), inst);
    CHECK(fsd::validate(inst, yes).ok());
    CHECK(fsd::makespan(inst, yes) == 28);

    CHECK(run("gen hardness --weights 1,1 --R 5").exit_code == 2);
    // no certificate exists for these weights
    const RunResult none = run("gen hardness --weights 1,1,4 --R 16 -o " + path("h2.fsd") +
                               " --yes-sched " + path("h2.sched"));
    CHECK(none.exit_code == 2);
    CHECK(none.output.find("no subset") != std::string::npos);
}

TEST_CASE("gen random is deterministic and honors its flags") {
    const std::string flags = "gen random --n 5 --delays 0,12 --pmax 9 --seed 42";
    const RunResult a = run(flags);
    const RunResult b = run(flags);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    const fsd::Instance inst = fsd::parse_instance(a.output);
    CHECK(inst.size() == 5);
    for (const fsd::Job& j : inst.jobs) CHECK((j.l == 0 || j.l == 12));
}

TEST_CASE("gantt: renders valid schedules, refuses invalid ones") {
    fsd::write_file(path("g.fsd"), "1\n2 3 4\n");
    fsd::write_file(path("g.sched"), "0 0\n");
    const RunResult ok = run("gantt " + path("g.fsd") + " " + path("g.sched"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("<svg") != std::string::npos);

    fsd::write_file(path("gbad.fsd"), "2\n2 0 2\n2 0 2\n");
    fsd::write_file(path("gbad.sched"), "0 0\n1 1\n");
    const RunResult bad = run("gantt " + path("gbad.fsd") + " " + path("gbad.sched"));
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("overlap") != std::string::npos);
}

TEST_CASE("bench: refuses exact beyond the cap, writes the fixed header") {
    const RunResult refused =
        run("bench --count 1 --n 10 --delays 0,5 --pmax 4 --seed 1 --with-exact");
    CHECK(refused.exit_code == 3);

    const RunResult ok = run("bench --count 3 --n 4 --delays 0,5 --pmax 4 --seed 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.rfind("instance_id,n,L1,L2,concat,lb,exact,ratio_exact,ratio_lb,"
                          "ms_concat,ms_exact\n", 0) == 0);
}
