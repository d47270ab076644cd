"""
Reachability, strong reachability and the Panyushev property of nilpotent elements, checked by
linear algebra on the centralizer, plus the labelled Dynkin diagram bookkeeping used by the
centre and 2-free core relations for psl(n|n).
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import pairwise
from typing import Any

from .exceptional import representative
from .field import Scalar
from .linalg import Subspace, Vector, intersect, is_subspace, span, subspace_sum
from .log import log
from .matrixalg import (
    DynkinPyramid,
    NilpotentData,
    SuperPartition,
    nilpotent,
    osp_decomposition,
)
from .superalg import (
    GradedDecomposition,
    SuperAlgebra,
    bracket_span,
    center_of,
    centralizer,
    centralizer_in,
    derived_subspace,
    generated_subalgebra,
    grade_decompose,
    is_ad_nilpotent,
)

TYPE_A = ("gl", "sl", "psl")


def _nonzero(e: Sequence[Scalar]) -> bool:
    return any(e)


def is_reachable(A: SuperAlgebra, e: Sequence[Scalar]) -> bool:
    "e lies in [g^e, g^e]."
    if not _nonzero(e):
        return True
    ge = centralizer(A, e)
    return derived_subspace(A, ge, within=ge).contains(e)


def is_strongly_reachable(A: SuperAlgebra, e: Sequence[Scalar]) -> bool:
    "[g^e, g^e] = g^e."
    ge = centralizer(A, e)
    return derived_subspace(A, ge, within=ge).dim == ge.dim


def graded_centralizer(
    A: SuperAlgebra, e: Sequence[Scalar], h: Sequence[Scalar]
) -> tuple[Subspace, GradedDecomposition]:
    ge = centralizer(A, e)
    return ge, grade_decompose(A, ge, h)


def _panyushev(A: SuperAlgebra, grading: GradedDecomposition) -> tuple[bool, bool]:
    positive = grading.positive()
    if not positive.dim:
        return True, True

    degree_one = grading.piece(1)
    generated = generated_subalgebra(A, degree_one).dim == positive.dim

    layerwise = True
    top = max(grading.pieces)
    for j in range(1, top):
        target = grading.piece(j + 1)
        if not target.dim:
            continue
        if bracket_span(A, degree_one, grading.piece(j), within=target).dim != target.dim:
            layerwise = False
            break

    return generated, layerwise


def satisfies_panyushev(
    A: SuperAlgebra, e: Sequence[Scalar], h: Sequence[Scalar]
) -> tuple[bool, bool]:
    """
    (generated, layerwise): whether g^e(>=1) is generated by g^e(1), and whether
    [g^e(1), g^e(j)] = g^e(j+1) for every j >= 1.
    """
    _, grading = graded_centralizer(A, e, h)
    return _panyushev(A, grading)


def _degree_one(A: SuperAlgebra, e: Sequence[Scalar], grading: GradedDecomposition) -> bool:
    if not _nonzero(e):
        return True
    degree_one = grading.piece(1)
    return bracket_span(A, degree_one, degree_one, within=grading.piece(2)).contains(e)


def panyushev_degree_one(
    A: SuperAlgebra, e: Sequence[Scalar], h: Sequence[Scalar]
) -> bool:
    "e lies in [g^e(1), g^e(1)]."
    _, grading = graded_centralizer(A, e, h)
    return _degree_one(A, e, grading)


def reachability_criterion(partition: SuperPartition) -> bool:
    "Consecutive parts differ by 0 or 1 and the smallest part is 1."
    sizes = partition.sizes
    gaps_ok = all(a - b in (0, 1) for a, b in pairwise(sizes))
    return gaps_ok and sizes[-1] == 1


def center_of_centralizer(A: SuperAlgebra, e: Sequence[Scalar]) -> Subspace:
    return center_of(A, centralizer(A, e))


def centre_of_h_centralizer(A: SuperAlgebra, h: Sequence[Scalar]) -> Subspace:
    "z(g^h)."
    return center_of(A, centralizer(A, h))


def e_power_span(data: NilpotentData) -> Subspace:
    "span{e, e^2, ..., e^(lambda_1 - 1)} inside the algebra of `data`."
    largest = data.partition.sizes[0]
    return span(
        (data.power(k) for k in range(1, largest)), data.algebra.algebra.dim
    )


# type A diagrams


@dataclass(frozen=True)
class LabelledDiagram:
    """
    Node i stands for the simple root eps_i - eps_(i+1) in pyramid numbering. A node is grey when
    the two boxes it joins have different parities.
    """

    nodes: tuple[int, ...]
    labels: tuple[int, ...]
    grey: tuple[bool, ...]

    @property
    def n2(self) -> int:
        return sum(1 for label in self.labels if label == 2)

    @property
    def has_label_one(self) -> bool:
        return 1 in self.labels

    @property
    def label_sum(self) -> int:
        return sum(self.labels)

    def to_dict(self) -> dict[str, Any]:
        return {
            "nodes": [
                {"node": node, "label": label, "kind": "grey" if grey else "white"}
                for node, label, grey in zip(self.nodes, self.labels, self.grey, strict=True)
            ],
            "n2": self.n2,
            "label_sum": self.label_sum,
        }


def _boxes_in_order(P: DynkinPyramid):
    return sorted(P.boxes, key=lambda box: box.number)


def labelled_diagram_typeA(P: DynkinPyramid) -> LabelledDiagram:
    boxes = _boxes_in_order(P)
    pairs = list(pairwise(boxes))
    return LabelledDiagram(
        nodes=tuple(range(1, len(boxes))),
        labels=tuple(right.col - left.col for left, right in pairs),
        grey=tuple(left.parity != right.parity for left, right in pairs),
    )


def n2(diagram: LabelledDiagram) -> int:
    return diagram.n2


def two_free_core(diagram: LabelledDiagram) -> LabelledDiagram:
    "The diagram with every node labelled 2 removed."
    kept = [i for i, label in enumerate(diagram.labels) if label != 2]
    return LabelledDiagram(
        nodes=tuple(diagram.nodes[i] for i in kept),
        labels=tuple(diagram.labels[i] for i in kept),
        grey=tuple(diagram.grey[i] for i in kept),
    )


def core_blocks(P: DynkinPyramid, diagram: LabelledDiagram) -> list[list[int]]:
    "Runs of boxes joined by 2-free core nodes, as standard basis indices."
    boxes = _boxes_in_order(P)
    blocks = [[boxes[0].index]]
    for box, label in zip(boxes[1:], diagram.labels, strict=True):
        if label == 2:
            blocks.append([box.index])
        else:
            blocks[-1].append(box.index)
    return blocks


@dataclass(frozen=True)
class PyramidStats:
    """
    Column statistics of a pyramid: `columns` maps a column to (c, r, s), the number of boxes,
    of even boxes and of odd boxes. `k` is the first positive empty column.
    """

    columns: dict[int, tuple[int, int, int]]
    k: int
    tau: int
    sigma: int
    balanced: bool
    has_label_one: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "columns": {str(col): list(counts) for col, counts in self.columns.items()},
            "k": self.k,
            "tau": self.tau,
            "sigma": self.sigma,
            "balanced": self.balanced,
        }


def pyramid_stats(P: DynkinPyramid) -> PyramidStats:
    counts = P.column_counts()
    k = 1
    while counts.get(k, (0, 0, 0))[0]:
        k += 1

    has_label_one = labelled_diagram_typeA(P).has_label_one

    def matched(col: int) -> bool:
        _, r, s = counts[col]
        return r == s != 0

    if has_label_one:
        tau = sum(1 for col in counts if abs(col) > k and matched(col))
    else:
        tau = sum(1 for col in counts if matched(col))

    inner_r = sum(r for col, (_, r, _) in counts.items() if abs(col) < k)
    inner_s = sum(s for col, (_, _, s) in counts.items() if abs(col) < k)

    return PyramidStats(
        columns=counts,
        k=k,
        tau=tau,
        sigma=1 if inner_r == inner_s else 0,
        balanced=all(r == s for _, r, s in counts.values()),
        has_label_one=has_label_one,
    )


def predicted_centre_difference(stats: PyramidStats, n2_count: int) -> int:
    "dim z(g^e) - dim z(g_0^{e_0}) for psl(n|n) from the column statistics."
    if not stats.has_label_one:
        return n2_count - stats.tau + 1 if stats.balanced else n2_count - stats.tau
    if stats.balanced and stats.sigma == 1:
        return n2_count - stats.tau
    return n2_count - stats.sigma - stats.tau


@dataclass(frozen=True)
class TwoFreeCoreResult:
    n2: int
    dim_centralizer: int
    dim_core_centralizer: int
    dim_centre: int
    dim_core_centre: int
    predicted_centre_difference: int

    @property
    def dimension_difference(self) -> int:
        return self.dim_centralizer - self.dim_core_centralizer

    @property
    def centre_difference(self) -> int:
        return self.dim_centre - self.dim_core_centre

    @property
    def dimension_ok(self) -> bool:
        return self.dimension_difference == self.n2

    @property
    def centre_ok(self) -> bool:
        return self.centre_difference == self.predicted_centre_difference

    def to_dict(self) -> dict[str, Any]:
        return {
            "n2": self.n2,
            "dim_centralizer": self.dim_centralizer,
            "dim_core_centralizer": self.dim_core_centralizer,
            "dim_centre": self.dim_centre,
            "dim_core_centre": self.dim_core_centre,
            "predicted_centre_difference": self.predicted_centre_difference,
        }


def two_free_core_check(data: NilpotentData) -> TwoFreeCoreResult:
    """
    Compare g^e with g_0^{e_0}, where g_0 is generated by E_(i,i+1) and E_(i+1,i) for the 2-free
    core nodes and e_0 is the part of e inside g_0.
    """
    algebra = data.algebra
    A = algebra.algebra
    diagram = labelled_diagram_typeA(data.pyramid)
    boxes = _boxes_in_order(data.pyramid)

    generators: list[Vector] = []
    for position, label in enumerate(diagram.labels):
        if label == 2:
            continue
        p, q = boxes[position].index, boxes[position + 1].index
        generators.append(algebra.lift_to_algebra({(p, q): 1}))
        generators.append(algebra.lift_to_algebra({(q, p): 1}))
    g0 = generated_subalgebra(A, span(generators, A.dim))

    block_of = {
        index: number
        for number, block in enumerate(core_blocks(data.pyramid, diagram))
        for index in block
    }
    e0_matrix = {
        (target, source): value
        for (target, source), value in data.e_matrix.items()
        if block_of[target] == block_of[source]
    }
    e0 = algebra.lift_to_algebra(e0_matrix)

    ge = centralizer(A, data.e)
    g0e0 = centralizer_in(A, g0, e0)
    stats = pyramid_stats(data.pyramid)

    return TwoFreeCoreResult(
        n2=diagram.n2,
        dim_centralizer=ge.dim,
        dim_core_centralizer=g0e0.dim,
        dim_centre=center_of(A, ge).dim,
        dim_core_centre=center_of(A, g0e0).dim,
        predicted_centre_difference=predicted_centre_difference(stats, diagram.n2),
    )


# orbit reports


@dataclass(frozen=True)
class OrbitFlags:
    reachable: bool
    strongly_reachable: bool
    panyushev_generated: bool
    panyushev_layerwise: bool
    degree_one: bool
    criterion: bool | None = None

    def to_dict(self) -> dict[str, bool | None]:
        return {
            "reachable": self.reachable,
            "strongly_reachable": self.strongly_reachable,
            "panyushev_generated": self.panyushev_generated,
            "panyushev_layerwise": self.panyushev_layerwise,
            "degree_one": self.degree_one,
            "criterion": self.criterion,
        }


@dataclass(frozen=True)
class OrbitReport:
    algebra: str
    orbit: str
    dims: dict[str, int]
    graded_dims: dict[int, int]
    flags: OrbitFlags
    diagram: LabelledDiagram | None = None
    falsifications: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra,
            "orbit": self.orbit,
            "dims": dict(self.dims),
            "graded_dims": {str(j): d for j, d in sorted(self.graded_dims.items())},
            "flags": self.flags.to_dict(),
            "diagram": self.diagram.to_dict() if self.diagram else None,
            "falsifications": list(self.falsifications),
        }


def _falsifications(flags: OrbitFlags, graded_dims: dict[int, int], total: int) -> list[str]:
    found = []
    if flags.strongly_reachable and not flags.reachable:
        found.append("strongly reachable but not reachable")
    if flags.panyushev_generated and not flags.reachable:
        found.append("Panyushev but not reachable")
    if sum(graded_dims.values()) != total:
        found.append("graded pieces do not add up to g^e")
    if any(j < 0 and d for j, d in graded_dims.items()):
        found.append("g^e has negative grades")

    if flags.criterion is not None:
        claims = {
            "reachable": flags.reachable,
            "criterion": flags.criterion,
            "panyushev_generated": flags.panyushev_generated,
            "panyushev_layerwise": flags.panyushev_layerwise,
            "degree_one": flags.degree_one,
        }
        if len(set(claims.values())) > 1:
            rendered = ", ".join(f"{name}={value}" for name, value in claims.items())
            found.append(f"equivalent conditions disagree: {rendered}")
    return found


def analyze_orbit(
    A: SuperAlgebra,
    e: Sequence[Scalar],
    h: Sequence[Scalar],
    orbit: str,
    partition: SuperPartition | None = None,
    diagram: LabelledDiagram | None = None,
) -> OrbitReport:
    if _nonzero(e) and not is_ad_nilpotent(A, e):
        raise ValueError(f"{orbit} is not ad-nilpotent in {A.name}")

    ge, grading = graded_centralizer(A, e, h)
    derived = derived_subspace(A, ge, within=ge)
    generated, layerwise = _panyushev(A, grading)

    flags = OrbitFlags(
        reachable=derived.contains(e),
        strongly_reachable=derived.dim == ge.dim,
        panyushev_generated=generated,
        panyushev_layerwise=layerwise,
        degree_one=_degree_one(A, e, grading),
        criterion=reachability_criterion(partition) if partition is not None else None,
    )
    graded_dims = grading.dims()
    dims = {
        "g": A.dim,
        "g_e": ge.dim,
        "derived": derived.dim,
        "centre": center_of(A, ge).dim,
    }

    falsifications = _falsifications(flags, graded_dims, ge.dim)
    for problem in falsifications:
        log.warning(f"{A.name} {orbit}: {problem}")

    return OrbitReport(A.name, orbit, dims, graded_dims, flags, diagram, falsifications)


def analyze_partition(family: str, partition: SuperPartition | str) -> OrbitReport:
    data = nilpotent(family, partition)
    diagram = labelled_diagram_typeA(data.pyramid) if family in TYPE_A else None
    return analyze_orbit(
        data.algebra.algebra,
        data.e,
        data.h,
        str(data.partition),
        partition=data.partition,
        diagram=diagram,
    )


def analyze_representative(A: SuperAlgebra, label: str) -> OrbitReport:
    rep = representative(A, label)
    return analyze_orbit(A, rep.element, rep.h, rep.label)


def centre_is_e_powers(data: NilpotentData) -> bool:
    "z(g^e) equals the span of the powers of e."
    A = data.algebra.algebra
    centre = center_of_centralizer(A, data.e)
    powers = e_power_span(data)
    return centre.dim == powers.dim and is_subspace(powers, centre)


@dataclass(frozen=True)
class OspDerivedResult:
    """
    [g^e, g^e] against N1 + N2+ + abelian_odd + (abelian_even ∩ [N2, N2]), with the side
    conditions that the abelian part is abelian and [N1, N1] lands in it.
    """

    dim_derived: int
    dim_predicted: int
    matches: bool
    spans_centralizer: bool
    abelian_commutes: bool
    n1_into_abelian: bool
    n2_minus_dim: int
    reachable: bool

    @property
    def holds(self) -> bool:
        return (
            self.matches
            and self.spans_centralizer
            and self.abelian_commutes
            and self.n1_into_abelian
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim_derived": self.dim_derived,
            "dim_predicted": self.dim_predicted,
            "matches": self.matches,
            "spans_centralizer": self.spans_centralizer,
            "abelian_commutes": self.abelian_commutes,
            "n1_into_abelian": self.n1_into_abelian,
            "n2_minus_dim": self.n2_minus_dim,
            "reachable": self.reachable,
        }


def osp_derived_check(data: NilpotentData) -> OspDerivedResult:
    A = data.algebra.algebra
    pieces = osp_decomposition(data)
    ge = centralizer(A, data.e)
    derived = derived_subspace(A, ge, within=ge)

    n2_squared = bracket_span(A, pieces.n2, pieces.n2)
    predicted = subspace_sum(
        pieces.n1,
        pieces.n2_plus,
        pieces.abelian_odd,
        intersect(pieces.abelian_even, n2_squared),
    )
    abelian = pieces.abelian

    return OspDerivedResult(
        dim_derived=derived.dim,
        dim_predicted=predicted.dim,
        matches=predicted.dim == derived.dim and is_subspace(predicted, derived),
        spans_centralizer=pieces.total().dim == ge.dim and is_subspace(pieces.total(), ge),
        abelian_commutes=bracket_span(A, abelian, abelian).dim == 0,
        n1_into_abelian=is_subspace(bracket_span(A, pieces.n1, pieces.n1), abelian),
        n2_minus_dim=pieces.n2_minus.dim,
        reachable=derived.contains(data.e),
    )
