#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsd/bench.hpp"
#include "fsd/core.hpp"
#include "fsd/delays.hpp"
#include "fsd/exact.hpp"
#include "fsd/gantt.hpp"
#include "fsd/hardness.hpp"
#include "fsd/io.hpp"
#include "fsd/nowait.hpp"

namespace py = pybind11;
using namespace fsd;

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-machine flow shop with exact delays: solvers, gap instances, benches";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "FormatError", PyExc_ValueError);

    py::class_<Job>(m, "Job")
        .def(py::init<Time, Time, Time>(), py::arg("a"), py::arg("l"), py::arg("b"))
        .def_readwrite("a", &Job::a)
        .def_readwrite("l", &Job::l)
        .def_readwrite("b", &Job::b)
        .def(py::self == py::self)
        .def("__repr__", [](const Job& j) {
            return "Job(a=" + std::to_string(j.a) + ", l=" + std::to_string(j.l) +
                   ", b=" + std::to_string(j.b) + ")";
        });

    py::class_<Instance>(m, "Instance")
        .def(py::init<>())
        .def(py::init<std::vector<Job>>(), py::arg("jobs"))
        .def_readwrite("jobs", &Instance::jobs)
        .def("__len__", &Instance::size)
        .def(py::self == py::self)
        .def("total_a", &Instance::total_a)
        .def("total_b", &Instance::total_b)
        .def("max_job_span", &Instance::max_job_span);

    py::class_<Schedule>(m, "Schedule")
        .def(py::init<>())
        .def(py::init<std::vector<Time>>(), py::arg("start1"))
        .def_readwrite("start1", &Schedule::start1)
        .def("__len__", &Schedule::size)
        .def(py::self == py::self);

    py::class_<Violation>(m, "Violation")
        .def_readonly("machine", &Violation::machine)
        .def_readonly("job_a", &Violation::job_a)
        .def_readonly("job_b", &Violation::job_b)
        .def_readonly("overlap_begin", &Violation::overlap_begin)
        .def_readonly("overlap_end", &Violation::overlap_end)
        .def("__repr__", &describe);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("violations", &Verdict::violations)
        .def("ok", &Verdict::ok)
        .def("__bool__", &Verdict::ok);

    m.def("validate", &validate, py::arg("instance"), py::arg("schedule"));
    m.def("makespan", &makespan, py::arg("instance"), py::arg("schedule"));
    m.def("normalize", &normalize, py::arg("instance"), py::arg("schedule"));

    py::class_<NowaitEval>(m, "NowaitEval")
        .def_readonly("makespan", &NowaitEval::makespan)
        .def_readonly("schedule", &NowaitEval::schedule);
    py::class_<NowaitResult>(m, "NowaitResult")
        .def_readonly("order", &NowaitResult::order)
        .def_readonly("makespan", &NowaitResult::makespan)
        .def_readonly("schedule", &NowaitResult::schedule);
    m.def("nowait_makespan", &nowait_makespan, py::arg("instance"), py::arg("order"));
    m.def("solve_nowait_gg", &solve_nowait_gg, py::arg("instance"));
    m.def("solve_nowait_dp", &solve_nowait_dp, py::arg("instance"));
    m.def("solve_nowait_brute", &solve_nowait_brute, py::arg("instance"));

    py::class_<DelayClasses>(m, "DelayClasses")
        .def_readonly("l1", &DelayClasses::l1)
        .def_readonly("l2", &DelayClasses::l2)
        .def_readonly("jobs1", &DelayClasses::jobs1)
        .def_readonly("jobs2", &DelayClasses::jobs2);
    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("schedule", &SolveResult::schedule)
        .def_readonly("makespan", &SolveResult::makespan);
    py::class_<Concatenated>(m, "Concatenated")
        .def_readonly("instance", &Concatenated::instance)
        .def_readonly("schedule", &Concatenated::schedule);
    m.def("split_delay_classes", &split_delay_classes, py::arg("instance"));
    m.def("solve_equal_delay", &solve_equal_delay, py::arg("instance"));
    m.def("concatenate", &concatenate, py::arg("instance_a"), py::arg("schedule_a"),
          py::arg("instance_b"), py::arg("schedule_b"));
    m.def("solve_concatenation", &solve_concatenation, py::arg("instance"));

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("horizon", &SearchConfig::horizon)
        .def_readwrite("node_limit", &SearchConfig::node_limit)
        .def_readwrite("incumbent", &SearchConfig::incumbent);
    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("schedule", &ExactResult::schedule)
        .def_readonly("makespan", &ExactResult::makespan)
        .def_readonly("optimal", &ExactResult::optimal)
        .def_readonly("nodes", &ExactResult::nodes);
    m.def("solve_exact", &solve_exact, py::arg("instance"), py::arg("config") = SearchConfig{});
    m.def("solve_exact_grid", &solve_exact_grid, py::arg("instance"));

    py::class_<PartitionInput>(m, "PartitionInput")
        .def(py::init(&make_partition_input), py::arg("weights"), py::arg("r"))
        .def_readonly("weights", &PartitionInput::weights)
        .def_readonly("r", &PartitionInput::r)
        .def_property_readonly("s", &PartitionInput::half_sum);
    py::enum_<GapVerdict>(m, "GapVerdict")
        .value("AT_MOST_YES_THRESHOLD", GapVerdict::AtMostYesThreshold)
        .value("AT_LEAST_NO_THRESHOLD", GapVerdict::AtLeastNoThreshold)
        .value("FORBIDDEN_GAP", GapVerdict::ForbiddenGap);
    py::class_<Rational>(m, "Rational")
        .def_readonly("num", &Rational::num)
        .def_readonly("den", &Rational::den)
        .def(py::self == py::self)
        .def("__float__", &Rational::to_double)
        .def("__repr__", [](const Rational& r) {
            return std::to_string(r.num) + "/" + std::to_string(r.den);
        });
    m.def("generate", &generate, py::arg("partition_input"));
    m.def("build_yes_schedule", &build_yes_schedule, py::arg("partition_input"),
          py::arg("certificate"));
    m.def("classify", &classify, py::arg("partition_input"), py::arg("claimed_optimal"));
    m.def("yes_threshold", &yes_threshold, py::arg("partition_input"));
    m.def("no_threshold", &no_threshold, py::arg("partition_input"));
    m.def("ratio_bound", &ratio_bound, py::arg("k"));

    m.def("parse_instance", &parse_instance, py::arg("text"));
    m.def("format_instance", &format_instance, py::arg("instance"), py::arg("comment") = "");
    m.def("parse_schedule", &parse_schedule, py::arg("text"), py::arg("instance"));
    m.def("format_schedule", &format_schedule, py::arg("instance"), py::arg("schedule"));
    m.def("render_gantt", &render_gantt, py::arg("instance"), py::arg("schedule"));

    m.def(
        "random_instance",
        [](int n, Time l1, Time l2, Time pmin, Time pmax, std::uint64_t seed) {
            SplitMix64 rng(seed);
            return random_instance(n, l1, l2, pmin, pmax, rng);
        },
        py::arg("n"), py::arg("l1"), py::arg("l2"), py::arg("pmin"), py::arg("pmax"),
        py::arg("seed"));
}
