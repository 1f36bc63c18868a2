"""Smoke tests for the python module: worked examples end to end."""

import pytest

import fsd


def test_single_job_roundtrip():
    inst = fsd.Instance([fsd.Job(2, 3, 4)])
    sched = fsd.Schedule([0])
    assert fsd.validate(inst, sched).ok()
    assert fsd.makespan(inst, sched) == 9
    assert fsd.parse_instance(fsd.format_instance(inst)) == inst


def test_nowait_solvers_agree():
    inst = fsd.Instance([fsd.Job(1, 0, 4), fsd.Job(4, 0, 1), fsd.Job(2, 0, 2)])
    gg = fsd.solve_nowait_gg(inst)
    assert gg.makespan == 9
    assert fsd.solve_nowait_dp(inst).makespan == 9
    assert fsd.solve_nowait_brute(inst).makespan == 9
    assert fsd.validate(inst, gg.schedule).ok()
    assert sorted(gg.order) == [0, 1, 2]


def test_two_delay_example():
    inst = fsd.Instance([fsd.Job(1, 6, 1), fsd.Job(2, 0, 2)])
    approx = fsd.solve_concatenation(inst)
    exact = fsd.solve_exact(inst)
    assert approx.makespan == 12
    assert exact.makespan == 8
    assert exact.optimal
    assert fsd.validate(inst, approx.schedule).ok()


def test_equal_delay_shift():
    inst = fsd.Instance([fsd.Job(2, 5, 3), fsd.Job(4, 5, 1)])
    assert fsd.solve_equal_delay(inst).makespan == 12


def test_hardness_generator_and_certificate():
    p = fsd.PartitionInput([1, 1], 6)
    inst = fsd.generate(p)
    assert len(inst) == 8
    assert inst.jobs[0] == fsd.Job(1, 12, 1)
    yes = fsd.build_yes_schedule(p, [0])
    assert fsd.validate(inst, yes).ok()
    assert fsd.makespan(inst, yes) == 28
    assert fsd.classify(p, 28) == fsd.GapVerdict.AT_MOST_YES_THRESHOLD
    assert (fsd.yes_threshold(p), fsd.no_threshold(p)) == (28, 29)


def test_ratio_bound():
    r = fsd.ratio_bound(6)
    assert (r.num, r.den) == (29, 28)
    assert abs(float(fsd.ratio_bound(10**6)) - 1.25) < 1e-5
    with pytest.raises(ValueError):
        fsd.ratio_bound(5)


def test_errors_map_to_python_types():
    with pytest.raises(ValueError):
        fsd.PartitionInput([1, 1], 5)  # scale too small
    with pytest.raises(ValueError):
        fsd.parse_instance("1\n1 x 1\n")
    with pytest.raises(RuntimeError):
        fsd.solve_exact_grid(fsd.Instance([fsd.Job(30, 30, 30)]))  # capacity


def test_gantt_and_random_instance():
    inst = fsd.random_instance(n=5, l1=0, l2=12, pmin=1, pmax=9, seed=42)
    assert inst == fsd.random_instance(n=5, l1=0, l2=12, pmin=1, pmax=9, seed=42)
    sol = fsd.solve_concatenation(inst)
    svg = fsd.render_gantt(inst, sol.schedule)
    assert svg.startswith("<svg")
