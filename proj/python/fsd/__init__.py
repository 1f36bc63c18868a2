"""Two-machine flow shop with exact delays: solvers, gap instances, benches."""

from fsd._core import (
    CapacityError,
    Concatenated,
    DelayClasses,
    ExactResult,
    FormatError,
    GapVerdict,
    Instance,
    Job,
    NowaitEval,
    NowaitResult,
    PartitionInput,
    PreconditionError,
    Rational,
    Schedule,
    SearchConfig,
    SolveResult,
    StructuralError,
    Verdict,
    Violation,
    build_yes_schedule,
    classify,
    concatenate,
    format_instance,
    format_schedule,
    generate,
    makespan,
    no_threshold,
    normalize,
    nowait_makespan,
    parse_instance,
    parse_schedule,
    random_instance,
    ratio_bound,
    render_gantt,
    solve_concatenation,
    solve_equal_delay,
    solve_exact,
    solve_exact_grid,
    solve_nowait_brute,
    solve_nowait_dp,
    solve_nowait_gg,
    split_delay_classes,
    validate,
    yes_threshold,
)

__all__ = [name for name in dir() if not name.startswith("_")]
