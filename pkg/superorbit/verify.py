"""
Verification drivers: enumerate every partition (or exceptional orbit) in a range, compute both
sides of a claim by brute force and collect the instances where they disagree.

Counterexamples are returned as data. Sweeps fan out over a `multiprocessing.Pool`; every worker
builds its own algebras and the results come back in enumeration order.
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any

from .analysis import (
    OrbitReport,
    analyze_partition,
    analyze_representative,
    center_of_centralizer,
    centre_of_h_centralizer,
    e_power_span,
    is_reachable,
    labelled_diagram_typeA,
    osp_derived_check,
    pyramid_stats,
    reachability_criterion,
    two_free_core_check,
)
from .exceptional import (
    EXCEPTIONAL,
    ORBIT_LABELS,
    build_exceptional,
    check_commutators,
)
from .field import QQ_ALPHA_FIELD, ScalarField
from .linalg import is_subspace
from .log import log
from .matrixalg import (
    MatrixAlgebra,
    build_gl,
    build_osp,
    build_psl,
    build_sl,
    dim_formulas,
    nilpotent,
    osp_partitions,
    super_partitions,
)
from .superalg import centralizer, check_super_jacobi
from .timing import log_execution_time

THEOREMS = (
    "theorem1",
    "theorem2",
    "three-conditions",
    "dim-gl",
    "dim-psl",
    "centre",
    "psl-diagram",
    "two-free-core",
    "osp-derived",
    "jacobi",
    "anchors",
    "tables",
)

DEFAULT_MAX = {"gl": 8, "sl": 8, "psl": 4, "osp": 9}

# families swept when none is given
DEFAULT_FAMILIES: dict[str, tuple[str, ...]] = {
    "theorem1": ("sl", "psl", "osp"),
    "theorem2": ("sl", "psl", "osp"),
    "three-conditions": ("sl", "psl", "osp"),
    "dim-gl": ("gl", "sl"),
    "dim-psl": ("psl",),
    "centre": ("psl",),
    "psl-diagram": ("psl",),
    "two-free-core": ("psl",),
    "osp-derived": ("osp",),
    "jacobi": EXCEPTIONAL,
    "anchors": EXCEPTIONAL,
    "tables": EXCEPTIONAL,
}

ALLOWED_FAMILIES: dict[str, tuple[str, ...]] = {
    "theorem1": ("gl", "sl", "psl", "osp"),
    "theorem2": ("gl", "sl", "psl", "osp"),
    "three-conditions": ("gl", "sl", "psl", "osp"),
    "dim-gl": ("gl", "sl"),
    "dim-psl": ("psl",),
    "centre": ("psl",),
    "psl-diagram": ("psl",),
    "two-free-core": ("psl",),
    "osp-derived": ("osp",),
    "jacobi": ("gl", "sl", "psl", "osp", *EXCEPTIONAL),
    "anchors": EXCEPTIONAL,
    "tables": EXCEPTIONAL,
}

# (reachable, strongly reachable, Panyushev) per orbit, in table order
EXPECTED_FLAGS: dict[str, dict[str, tuple[bool, bool, bool]]] = {
    "D21": {
        "0": (True, True, True),
        "E1": (True, True, True),
        "E2": (True, True, True),
        "E3": (True, True, True),
        "E1+E2": (False, False, False),
        "E1+E3": (False, False, False),
        "E2+E3": (False, False, False),
        "E1+E2+E3": (True, False, True),
    },
    "G3": {
        "E+(x1+x2)": (False, False, False),
        "E+x2": (True, True, True),
        "E+x1": (True, False, False),
        "E+(x2+x5)": (True, False, True),
        "E": (True, True, True),
        "x1+x2": (False, False, False),
        "x2": (True, True, True),
        "x1": (True, True, False),
        "x2+x5": (False, False, False),
        "0": (True, True, True),
    },
    "F4": {
        "E+(R(e1,e-2)+R(e2,e-3)+R(e3,e0))": (False, False, False),
        "E+(R(e1,e-2)+R(e2,e0))": (False, False, False),
        "E+(R(e1,e-3)+R(e2,e3))": (True, False, True),
        "E+(R(e1,e0)+R(e2,e3))": (True, False, True),
        "E+R(e1,e0)": (False, False, False),
        "E+R(e1,e2)": (True, True, True),
        "E": (True, True, True),
        "R(e1,e-2)+R(e2,e-3)+R(e3,e0)": (False, False, False),
        "R(e1,e-2)+R(e2,e0)": (False, False, False),
        "R(e1,e-3)+R(e2,e3)": (False, False, False),
        "R(e1,e0)+R(e2,e3)": (True, True, True),
        "R(e1,e0)": (True, True, True),
        "R(e1,e2)": (True, True, True),
        "0": (True, True, True),
    },
}


@dataclass(frozen=True)
class Task:
    theorem: str
    family: str
    subject: str
    field: ScalarField = QQ_ALPHA_FIELD


@dataclass(frozen=True)
class InstanceResult:
    family: str
    subject: str
    data: dict[str, Any]
    problems: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.problems

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "subject": self.subject,
            "data": self.data,
            "problems": list(self.problems),
        }


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    families: tuple[str, ...]
    instances: list[InstanceResult]
    elapsed: float | None = None

    @property
    def counterexamples(self) -> list[InstanceResult]:
        return [instance for instance in self.instances if not instance.holds]

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "families": list(self.families),
            "instances": len(self.instances),
            "counterexamples": [instance.to_dict() for instance in self.counterexamples],
            "results": [instance.to_dict() for instance in self.instances],
            "elapsed": self.elapsed,
        }


# ranges


def algebra_sizes(family: str, max_size: int | None = None) -> Iterator[tuple[int, int]]:
    """
    (m, n) pairs of a sweep. gl and sl take m, n >= 1 with m + n <= max (sl skips m = n), psl
    takes (n, n) with 2 <= n <= max and osp takes (m, 2n) with m + 2n <= max.
    """
    bound = max_size if max_size is not None else DEFAULT_MAX[family]
    match family:
        case "gl" | "sl":
            for total in range(2, bound + 1):
                for m in range(1, total):
                    n = total - m
                    if family == "sl" and m == n:
                        continue
                    yield m, n
        case "psl":
            for n in range(2, bound + 1):
                yield n, n
        case "osp":
            for total in range(3, bound + 1):
                for n in range(1, (total - 1) // 2 + 1):
                    yield total - 2 * n, 2 * n
        case _:
            raise ValueError(f"no sweep range for family '{family}'")


def sweep_partitions(family: str, max_size: int | None = None) -> Iterator[str]:
    for m, n in algebra_sizes(family, max_size):
        partitions = osp_partitions(m, n) if family == "osp" else super_partitions(m, n)
        for partition in partitions:
            yield str(partition)


def _algebra_for(family: str, m: int, n: int) -> MatrixAlgebra:
    match family:
        case "gl":
            return build_gl(m, n)
        case "sl":
            return build_sl(m, n)
        case "psl":
            return build_psl(n)
        case _:
            return build_osp(m, n // 2)


def tasks_for(
    theorem: str,
    families: tuple[str, ...],
    max_size: int | None = None,
    field: ScalarField = QQ_ALPHA_FIELD,
) -> list[Task]:
    tasks = []
    for family in families:
        if family in EXCEPTIONAL:
            subjects = ORBIT_LABELS[family] if theorem == "tables" else (family,)
        elif theorem == "jacobi":
            subjects = tuple(f"{m}|{n}" for m, n in algebra_sizes(family, max_size))
        else:
            subjects = tuple(sweep_partitions(family, max_size))
        tasks.extend(Task(theorem, family, subject, field) for subject in subjects)
    return tasks


# per-instance checks


def _flags_agree(data: dict[str, Any], names: tuple[str, ...]) -> list[str]:
    values = {name: data[name] for name in names}
    if len(set(values.values())) > 1:
        rendered = ", ".join(f"{name}={value}" for name, value in values.items())
        return [f"conditions disagree: {rendered}"]
    return []


def _check_theorem1(task: Task) -> InstanceResult:
    data = nilpotent(task.family, task.subject)
    A = data.algebra.algebra
    result = {
        "reachable": is_reachable(A, data.e),
        "criterion": reachability_criterion(data.partition),
    }
    return InstanceResult(
        task.family, task.subject, result, _flags_agree(result, ("reachable", "criterion"))
    )


def _check_equivalences(task: Task) -> InstanceResult:
    report = analyze_partition(task.family, task.subject)
    flags = report.flags.to_dict()
    if task.theorem == "theorem2":
        names = ("reachable", "criterion", "panyushev_generated", "panyushev_layerwise")
    else:
        names = ("reachable", "panyushev_generated", "degree_one")
    problems = _flags_agree(flags, names)
    if flags["strongly_reachable"] and not flags["reachable"]:
        problems.append("strongly reachable but not reachable")
    problems.extend(
        problem for problem in report.falsifications if "negative" in problem or "add up" in problem
    )
    return InstanceResult(
        task.family,
        task.subject,
        {name: flags[name] for name in names} | {"graded_dims": report.to_dict()["graded_dims"]},
        problems,
    )


def _check_dim_gl(task: Task) -> InstanceResult:
    data = nilpotent(task.family, task.subject)
    A = data.algebra.algebra
    ge = centralizer(A, data.e)
    formulas = dim_formulas(data.partition)
    problems = []

    if task.family == "gl":
        even = sum(1 for vector in ge.basis if A.parity_of(vector) == 0)
        result = {
            "dim": ge.dim,
            "dim_even": even,
            "dim_odd": ge.dim - even,
            "formula_even": formulas.gl_even,
            "formula_odd": formulas.gl_odd,
        }
        if (even, ge.dim - even) != (formulas.gl_even, formulas.gl_odd):
            problems.append(
                f"dim gl^e = ({even}|{ge.dim - even}), "
                f"formula gives ({formulas.gl_even}|{formulas.gl_odd})"
            )
    else:
        result = {"dim": ge.dim, "formula": formulas.sl}
        if ge.dim != formulas.sl:
            problems.append(f"dim sl^e = {ge.dim}, formula gives {formulas.sl}")

    return InstanceResult(task.family, task.subject, result, problems)


def _check_dim_psl(task: Task) -> InstanceResult:
    data = nilpotent("psl", task.subject)
    ge = centralizer(data.algebra.algebra, data.e)
    formula = dim_formulas(data.partition).psl
    problems = [] if ge.dim == formula else [f"dim psl^e = {ge.dim}, formula gives {formula}"]
    return InstanceResult(task.family, task.subject, {"dim": ge.dim, "formula": formula}, problems)


def _check_centre(task: Task) -> InstanceResult:
    data = nilpotent("psl", task.subject)
    centre = center_of_centralizer(data.algebra.algebra, data.e)
    powers = e_power_span(data)
    expected = data.partition.sizes[0] - 1
    problems = []
    if not (centre.dim == powers.dim and is_subspace(powers, centre)):
        problems.append(
            f"z(g^e) has dim {centre.dim} and is not the span of the powers of e "
            f"(dim {powers.dim})"
        )
    if centre.dim != expected:
        problems.append(f"dim z(g^e) = {centre.dim}, expected lambda_1 - 1 = {expected}")
    return InstanceResult(
        task.family,
        task.subject,
        {"dim_centre": centre.dim, "dim_powers": powers.dim},
        problems,
    )


def _check_psl_diagram(task: Task) -> InstanceResult:
    data = nilpotent("psl", task.subject)
    A = data.algebra.algebra
    diagram = labelled_diagram_typeA(data.pyramid)
    stats = pyramid_stats(data.pyramid)
    largest = data.partition.sizes[0]

    centre = center_of_centralizer(A, data.e).dim
    result: dict[str, Any] = {
        "dim_centre": centre,
        "label_sum": diagram.label_sum,
        "n2": diagram.n2,
        "has_label_one": diagram.has_label_one,
    }
    problems = []
    if 2 * centre != diagram.label_sum:
        problems.append(f"2 dim z(g^e) = {2 * centre}, label sum = {diagram.label_sum}")

    if not diagram.has_label_one:
        h_centre = centre_of_h_centralizer(A, data.h).dim
        expected = largest - 1 if stats.balanced else largest - 2
        result |= {"dim_h_centre": h_centre, "balanced": stats.balanced}
        if centre != diagram.n2:
            problems.append(f"dim z(g^e) = {centre}, n2 = {diagram.n2}")
        if h_centre != expected:
            problems.append(f"dim z(g^h) = {h_centre}, expected {expected}")

    return InstanceResult(task.family, task.subject, result, problems)


def _check_two_free_core(task: Task) -> InstanceResult:
    result = two_free_core_check(nilpotent("psl", task.subject))
    problems = []
    if not result.dimension_ok:
        problems.append(
            f"dim g^e - dim g0^e0 = {result.dimension_difference}, n2 = {result.n2}"
        )
    if not result.centre_ok:
        problems.append(
            f"dim z(g^e) - dim z(g0^e0) = {result.centre_difference}, "
            f"predicted {result.predicted_centre_difference}"
        )
    return InstanceResult(task.family, task.subject, result.to_dict(), problems)


def _check_osp_derived(task: Task) -> InstanceResult:
    result = osp_derived_check(nilpotent("osp", task.subject))
    problems = []
    if not result.matches:
        problems.append(
            f"[g^e, g^e] has dim {result.dim_derived}, decomposition gives {result.dim_predicted}"
        )
    if not result.spans_centralizer:
        problems.append("decomposition pieces do not span g^e")
    if not result.abelian_commutes:
        problems.append("abelian part does not commute")
    if not result.n1_into_abelian:
        problems.append("[N1, N1] leaves the abelian part")
    return InstanceResult(task.family, task.subject, result.to_dict(), problems)


def _check_jacobi(task: Task) -> InstanceResult:
    if task.family in EXCEPTIONAL:
        A = build_exceptional(task.family, task.field)
    else:
        m, n = (int(x) for x in task.subject.split("|"))
        A = _algebra_for(task.family, m, n).algebra
    violations = check_super_jacobi(A)
    problems = [f"[{a}, [{b}, {c}]] breaks super Jacobi" for a, b, c in violations[:10]]
    return InstanceResult(
        task.family, A.name, {"dim": A.dim, "violations": len(violations)}, problems
    )


def _check_anchors(task: Task) -> InstanceResult:
    A = build_exceptional(task.family, task.field)
    mismatches = check_commutators(A)
    return InstanceResult(task.family, A.name, {"mismatches": len(mismatches)}, mismatches)


def _check_table_row(task: Task) -> InstanceResult:
    A = build_exceptional(task.family, task.field)
    report = analyze_representative(A, task.subject)
    flags = report.flags
    actual = (flags.reachable, flags.strongly_reachable, flags.panyushev_generated)
    expected = EXPECTED_FLAGS[task.family][report.orbit]
    problems = [] if actual == expected else [f"flags {actual}, table has {expected}"]
    problems.extend(report.falsifications)
    return InstanceResult(task.family, task.subject, report.to_dict(), problems)


CHECKS = {
    "theorem1": _check_theorem1,
    "theorem2": _check_equivalences,
    "three-conditions": _check_equivalences,
    "dim-gl": _check_dim_gl,
    "dim-psl": _check_dim_psl,
    "centre": _check_centre,
    "psl-diagram": _check_psl_diagram,
    "two-free-core": _check_two_free_core,
    "osp-derived": _check_osp_derived,
    "jacobi": _check_jacobi,
    "anchors": _check_anchors,
    "tables": _check_table_row,
}


def run_task(task: Task) -> InstanceResult:
    return CHECKS[task.theorem](task)


def resolve_families(theorem: str, family: str | None) -> tuple[str, ...]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem '{theorem}', expected one of {', '.join(THEOREMS)}")
    if family is None:
        return DEFAULT_FAMILIES[theorem]
    if family not in ALLOWED_FAMILIES[theorem]:
        allowed = ", ".join(ALLOWED_FAMILIES[theorem])
        raise ValueError(f"{theorem} does not apply to '{family}', expected one of {allowed}")
    return (family,)


def verify_theorem(
    name: str,
    family: str | None = None,
    max_size: int | None = None,
    jobs: int = 1,
    field: ScalarField = QQ_ALPHA_FIELD,
) -> VerificationReport:
    families = resolve_families(name, family)
    tasks = tasks_for(name, families, max_size, field)
    log.info(f"verifying {name}", families=families, instances=len(tasks), jobs=jobs)

    with log_execution_time(f"verify {name}") as timer:
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs) as pool:
                instances = pool.map(run_task, tasks, chunksize=1)
        else:
            instances = [run_task(task) for task in tasks]

    report = VerificationReport(name, families, instances, timer.elapsed)
    for instance in report.counterexamples:
        log.warning(
            f"{name} fails for {instance.family} {instance.subject}",
            problems=instance.problems,
        )
    log.info(
        f"verified {name}",
        instances=len(instances),
        counterexamples=len(report.counterexamples),
        elapsed=timer.elapsed,
    )
    return report


def _analyze_task(task: tuple[str, str]) -> OrbitReport:
    family, subject = task
    return analyze_partition(family, subject)


def enumerate_partitions(
    family: str, max_size: int | None = None, jobs: int = 1
) -> list[OrbitReport]:
    "Analyse every partition of `family` in the sweep range, in enumeration order."
    if family not in DEFAULT_MAX:
        raise ValueError(f"cannot enumerate '{family}', expected one of {', '.join(DEFAULT_MAX)}")

    tasks = [(family, subject) for subject in sweep_partitions(family, max_size)]
    log.info(f"enumerating {family}", partitions=len(tasks), jobs=jobs)
    with log_execution_time(f"enumerate {family}"):
        if jobs > 1 and len(tasks) > 1:
            with Pool(jobs) as pool:
                return pool.map(_analyze_task, tasks, chunksize=1)
        return [_analyze_task(task) for task in tasks]
