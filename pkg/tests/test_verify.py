import pytest

from superorbit.field import QQ_ALPHA_FIELD
from superorbit.verify import (
    EXPECTED_FLAGS,
    THEOREMS,
    InstanceResult,
    Task,
    VerificationReport,
    algebra_sizes,
    enumerate_partitions,
    resolve_families,
    run_task,
    sweep_partitions,
    tasks_for,
    verify_theorem,
)


def test_algebra_sizes():
    assert list(algebra_sizes("sl", 4)) == [(1, 2), (2, 1), (1, 3), (3, 1)]
    assert list(algebra_sizes("gl", 3)) == [(1, 1), (1, 2), (2, 1)]
    assert list(algebra_sizes("psl", 3)) == [(2, 2), (3, 3)]
    assert list(algebra_sizes("osp", 5)) == [(1, 2), (2, 2), (3, 2), (1, 4)]

    with pytest.raises(ValueError, match="no sweep range"):
        list(algebra_sizes("G3", 3))


def test_sweep_partitions():
    assert len(list(sweep_partitions("sl", 4))) == 10
    assert list(sweep_partitions("sl", 3)) == ["1|2", "1|1,1", "2|1", "1,1|1"]
    assert "3|2" in set(sweep_partitions("osp", 5))
    assert "2|2" not in set(sweep_partitions("osp", 5))


def test_tasks():
    assert tasks_for("jacobi", ("G3",)) == [Task("jacobi", "G3", "G3", QQ_ALPHA_FIELD)]
    assert [task.subject for task in tasks_for("jacobi", ("sl",), 3)] == ["1|2", "2|1"]
    assert len(tasks_for("tables", ("F4",))) == 14
    assert sum(flags[0] for flags in EXPECTED_FLAGS["F4"].values()) == 8


def test_resolve_families():
    assert resolve_families("dim-psl", None) == ("psl",)
    assert resolve_families("theorem1", "gl") == ("gl",)
    assert "tables" in THEOREMS

    with pytest.raises(ValueError, match="unknown theorem"):
        resolve_families("bogus", None)
    with pytest.raises(ValueError, match="does not apply"):
        resolve_families("dim-psl", "sl")


def test_report_collects_counterexamples():
    good = InstanceResult("sl", "2|1", {"reachable": True})
    bad = InstanceResult("sl", "3|1", {"reachable": True}, ["conditions disagree"])
    report = VerificationReport("theorem1", ("sl",), [good, bad], 0.5)

    assert good.holds
    assert not bad.holds
    assert report.counterexamples == [bad]

    document = report.to_dict()
    assert document["instances"] == 2
    assert document["counterexamples"] == [bad.to_dict()]
    assert document["families"] == ["sl"]


def test_theorem1_on_small_sl():
    report = verify_theorem("theorem1", "sl", 4)
    assert len(report.instances) == 10
    assert report.counterexamples == []
    assert report.elapsed is not None

    by_subject = {instance.subject: instance.data for instance in report.instances}
    assert by_subject["2|1"] == {"reachable": True, "criterion": True}
    assert by_subject["3|1"] == {"reachable": False, "criterion": False}


def test_dim_gl():
    report = verify_theorem("dim-gl", "gl", 3)
    assert report.counterexamples == []
    first = report.instances[0].data
    assert first["dim"] == first["formula_even"] + first["formula_odd"]


def test_two_free_core_instance():
    result = run_task(Task("two-free-core", "psl", "2|2"))
    assert result.holds
    assert result.data["n2"] == 1


def test_jacobi_and_anchors():
    assert verify_theorem("jacobi", "sl", 3).counterexamples == []

    anchors = verify_theorem("anchors", "G3")
    assert [instance.subject for instance in anchors.instances] == ["G(3)"]
    assert anchors.counterexamples == []


def test_parallel_matches_serial():
    serial = verify_theorem("theorem1", "sl", 3)
    parallel = verify_theorem("theorem1", "sl", 3, jobs=2)
    assert [instance.to_dict() for instance in parallel.instances] == [
        instance.to_dict() for instance in serial.instances
    ]


def test_enumerate_partitions():
    reports = enumerate_partitions("sl", 3)
    assert [report.orbit for report in reports] == ["1|2", "1|1,1", "2|1", "1,1|1"]
    assert all(report.flags.criterion is not None for report in reports)

    with pytest.raises(ValueError, match="cannot enumerate"):
        enumerate_partitions("G3")


def test_criterion_misses_opposite_parity_neighbours():
    # [E12 (x) 1, E21 (x) t] = e inside g^e = gl(1|1)[t]/t^2
    square = run_task(Task("theorem1", "psl", "2|2"))
    assert square.data == {"reachable": True, "criterion": False}
    assert not square.holds

    rows = run_task(Task("three-conditions", "sl", "3|2"))
    assert rows.data["reachable"]
    assert rows.data["degree_one"]
    assert not rows.data["panyushev_generated"]


def test_two_free_core_counterexamples():
    centre = run_task(Task("two-free-core", "psl", "2|1,1"))
    assert centre.problems == ["dim z(g^e) - dim z(g0^e0) = 0, predicted -1"]

    dimension = run_task(Task("two-free-core", "psl", "3|1,1,1"))
    assert dimension.problems == ["dim g^e - dim g0^e0 = 1, n2 = 2"]


SWEEP_MAX = {"sl": 6, "psl": 4, "osp": 7}

# reachable although the partition criterion fails
CRITERION_BREAKS = {
    "sl": {"2|3", "3|2"},
    "psl": {"2|2", "3|3", "4|4", "4|3,1", "3,1|4", "3,1|3,1", "2,2|2,2"},
    "osp": {"3|2", "3|4"},
}

# reachable while g^e(1) does not generate g^e(>=1)
PANYUSHEV_BREAKS = {
    "sl": {"2|3", "3|2"},
    "psl": set(),
    "osp": {"3|2", "3|4"},
}


@pytest.mark.slow
@pytest.mark.parametrize("family", ["sl", "psl", "osp"])
def test_equivalence_sweeps(family):
    def failing(theorem):
        report = verify_theorem(theorem, family, SWEEP_MAX[family], jobs=2)
        return {instance.subject for instance in report.counterexamples}

    assert failing("theorem1") == CRITERION_BREAKS[family]
    assert failing("three-conditions") == PANYUSHEV_BREAKS[family]
    assert failing("theorem2") == CRITERION_BREAKS[family] | PANYUSHEV_BREAKS[family]


@pytest.mark.slow
@pytest.mark.parametrize("key", ["G3", "F4"])
def test_tables_match(key):
    assert verify_theorem("tables", key).counterexamples == []


@pytest.mark.slow
def test_dim_psl_and_centre():
    assert verify_theorem("dim-psl", "psl", 3).counterexamples == []
    assert verify_theorem("centre", "psl", 3).counterexamples == []
