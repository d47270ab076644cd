"""
Matrix superalgebras gl(m|n), sl(m|n), psl(n|n) and osp(m|2n) together with the combinatorics of
nilpotent orbits in them: super-partitions, Dynkin pyramids, sl(2)-triples and centralizer bases.

Matrices are sparse dicts keyed by (row, column) in the standard basis of C^{m|n}, where the even
basis vectors come first. Box (i, a) of a pyramid stands for the vector e^a v_i.
"""

import re
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache, cached_property
from itertools import pairwise, product

from .errors import ConstructionError, InvalidPartitionError
from .linalg import Echelon, Subspace, Vector, span, to_dense
from .log import log
from .superalg import (
    Embedding,
    Projection,
    SparseMatrix,
    Structure,
    SuperAlgebra,
    matrix_product,
    quotient,
    subalgebra,
)
from .timing import log_time

FAMILIES = ("gl", "sl", "psl", "osp")

_PART_LIST = re.compile(r"^\s*(\d+(\s*,\s*\d+)*)?\s*$")


def integer_partitions(total: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    "Partitions of `total` in weakly decreasing order, largest first."
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first, *rest)


@dataclass(frozen=True)
class SuperPartition:
    """
    Parts are (size, parity) pairs, sorted by decreasing size with even parts first on ties.
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for size, parity in self.parts:
            if size < 1 or parity not in (0, 1):
                raise InvalidPartitionError(f"invalid part ({size}, {parity})")
        canonical = tuple(sorted(self.parts, key=lambda part: (-part[0], part[1])))
        object.__setattr__(self, "parts", canonical)

    @classmethod
    def from_parts(cls, even: tuple[int, ...] = (), odd: tuple[int, ...] = ()) -> "SuperPartition":
        return cls(tuple((size, 0) for size in even) + tuple((size, 1) for size in odd))

    @classmethod
    def parse(cls, text: str) -> "SuperPartition":
        """
        "p1,p2,...|q1,q2,..." with the even parts before the bar. Either side may be empty and a
        missing bar means every part is even.
        """
        even_text, _, odd_text = text.partition("|")
        sides = []
        for side in (even_text, odd_text):
            if not _PART_LIST.match(side):
                raise InvalidPartitionError(f"cannot parse partition '{text}'")
            sides.append(tuple(int(part) for part in side.split(",") if part.strip()))

        if not sides[0] and not sides[1]:
            raise InvalidPartitionError("partition has no parts")
        if any(size == 0 for size in sides[0] + sides[1]):
            raise InvalidPartitionError(f"parts must be positive in '{text}'")

        return cls.from_parts(sides[0], sides[1])

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(size for size, _ in self.parts)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(parity for _, parity in self.parts)

    @property
    def m(self) -> int:
        return sum(size for size, parity in self.parts if parity == 0)

    @property
    def n(self) -> int:
        return sum(size for size, parity in self.parts if parity == 1)

    @property
    def even_parts(self) -> tuple[int, ...]:
        return tuple(size for size, parity in self.parts if parity == 0)

    @property
    def odd_parts(self) -> tuple[int, ...]:
        return tuple(size for size, parity in self.parts if parity == 1)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        even = ",".join(str(size) for size in self.even_parts)
        odd = ",".join(str(size) for size in self.odd_parts)
        return f"{even}|{odd}"

    def osp_violation(self) -> str | None:
        for parity, sizes, bad_size in ((0, self.even_parts, 0), (1, self.odd_parts, 1)):
            for size in set(sizes):
                if size % 2 == bad_size and sizes.count(size) % 2:
                    kind = "even" if bad_size == 0 else "odd"
                    return (
                        f"parts of parity {parity} with {kind} size {size} "
                        f"must have even multiplicity"
                    )
        return None

    @property
    def is_osp(self) -> bool:
        return self.osp_violation() is None

    def validate_osp(self) -> "SuperPartition":
        if violation := self.osp_violation():
            raise InvalidPartitionError(f"{self} is not an osp partition: {violation}")
        return self


def super_partitions(m: int, n: int) -> Iterator[SuperPartition]:
    for even, odd in product(integer_partitions(m), integer_partitions(n)):
        if even or odd:
            yield SuperPartition.from_parts(even, odd)


def osp_partitions(m: int, n: int) -> Iterator[SuperPartition]:
    "Partitions of (m|n) labelling nilpotent orbits of osp(m|n); n is the odd dimension."
    return (partition for partition in super_partitions(m, n) if partition.is_osp)


@dataclass(frozen=True)
class Box:
    part: int
    power: int
    row: int
    col: int
    parity: int
    number: int
    index: int


@dataclass(frozen=True)
class DynkinPyramid:
    """
    Row i (counted from the bottom) has lambda_i boxes at columns -lambda_i+1, ..., lambda_i-1.
    The vector e^a v_i sits at column lambda_i-1-2a, so e moves boxes two columns to the left.

    Boxes are numbered column by column from the left, top to bottom inside a column. `index`
    is the position in the standard basis: even boxes in numbering order, then odd boxes.
    """

    partition: SuperPartition
    boxes: tuple[Box, ...]

    @cached_property
    def _by_position(self) -> dict[tuple[int, int], Box]:
        return {(box.part, box.power): box for box in self.boxes}

    def box(self, part: int, power: int) -> Box:
        return self._by_position[(part, power)]

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def columns(self) -> range:
        width = self.partition.sizes[0] if self.partition.parts else 1
        return range(-width + 1, width)

    def column_counts(self) -> dict[int, tuple[int, int, int]]:
        "Every integer column mapped to (c, r, s): all, even and odd boxes."
        counts = {}
        for col in self.columns:
            even = sum(1 for box in self.boxes if box.col == col and box.parity == 0)
            odd = sum(1 for box in self.boxes if box.col == col and box.parity == 1)
            counts[col] = (even + odd, even, odd)
        return counts

    def h_diagonal(self) -> tuple[int, ...]:
        "-col for every box, in pyramid numbering."
        return tuple(-box.col for box in sorted(self.boxes, key=lambda box: box.number))

    def render(self) -> str:
        offset = -self.columns.start
        lines = []
        for row in reversed(range(1, len(self.partition) + 1)):
            cells = [" "] * (4 * len(self.columns) + 4)
            for box in self.boxes:
                if box.row == row:
                    start = 2 * (box.col + offset)
                    cells[start : start + 3] = list(f"[{box.parity}]")
            lines.append("".join(cells).rstrip())
        return "\n".join(lines)


def pyramid(partition: SuperPartition) -> DynkinPyramid:
    placed = []
    for part, (size, parity) in enumerate(partition.parts):
        for power in range(size):
            placed.append((part, power, part + 1, size - 1 - 2 * power, parity))

    ordered = sorted(placed, key=lambda item: (item[3], -item[2]))
    even = [item for item in ordered if item[4] == 0]
    odd = [item for item in ordered if item[4] == 1]
    index = {(item[0], item[1]): i for i, item in enumerate(even + odd)}

    boxes = tuple(
        Box(part, power, row, col, parity, number, index[(part, power)])
        for number, (part, power, row, col, parity) in enumerate(ordered, start=1)
    )
    return DynkinPyramid(partition, boxes)


def _standard_parities(m: int, n: int) -> tuple[int, ...]:
    return (0,) * m + (1,) * n


def gl_index(a: int, b: int, size: int) -> int:
    return a * size + b


def flatten(matrix: SparseMatrix, size: int) -> Vector:
    return to_dense({gl_index(r, c, size): v for (r, c), v in matrix.items()}, size * size)


def matrix_power(matrix: SparseMatrix, exponent: int, size: int) -> SparseMatrix:
    result: SparseMatrix = {(a, a): 1 for a in range(size)}
    for _ in range(exponent):
        result = matrix_product(result, matrix)
    return result


@cache
def _gl_algebra(m: int, n: int) -> SuperAlgebra:
    """
    [E_ab, E_cd] = d_bc E_ad - (-1)^{(p_a+p_b)(p_c+p_d)} d_da E_cb.
    """
    size = m + n
    parity = _standard_parities(m, n)
    names = []
    parities = []
    for a in range(size):
        for b in range(size):
            names.append(f"E{a + 1},{b + 1}")
            parities.append((parity[a] + parity[b]) % 2)

    structure: Structure = {}
    for a, b, c, d in product(range(size), repeat=4):
        if b != c and d != a:
            continue
        entry: dict[int, int] = {}
        if b == c:
            entry[gl_index(a, d, size)] = 1
        if d == a:
            sign = -1 if (parity[a] + parity[b]) * (parity[c] + parity[d]) % 2 else 1
            key = gl_index(c, b, size)
            entry[key] = entry.get(key, 0) - sign
        entry = {k: v for k, v in entry.items() if v}
        if entry:
            structure[(gl_index(a, b, size), gl_index(c, d, size))] = entry

    return SuperAlgebra(f"gl({m}|{n})", tuple(names), tuple(parities), structure)


@dataclass(frozen=True, eq=False)
class MatrixAlgebra:
    """
    A matrix superalgebra with the maps from gl(m|n)-matrices into its coordinates.

    `subspace` is the span inside gl (None for gl itself) and `projection` the quotient map from
    that subspace for psl.
    """

    algebra: SuperAlgebra
    m: int
    n: int
    family: str
    subspace: Subspace | None = None
    projection: Projection | None = None
    partition: SuperPartition | None = None

    @property
    def size(self) -> int:
        return self.m + self.n

    @property
    def parities(self) -> tuple[int, ...]:
        return _standard_parities(self.m, self.n)

    @property
    def name(self) -> str:
        return self.algebra.name

    def contains_matrix(self, matrix: SparseMatrix) -> bool:
        if self.subspace is None:
            return True
        return self.subspace.contains(flatten(matrix, self.size))

    def lift_to_algebra(self, matrix: SparseMatrix) -> Vector:
        "Coordinates of a gl(m|n) matrix in this algebra."
        coordinates = flatten(matrix, self.size)
        if self.subspace is not None:
            restricted = self.subspace.coordinates(coordinates)
            if restricted is None:
                raise ConstructionError(f"matrix does not lie in {self.name}")
            coordinates = restricted
        if self.projection is not None:
            coordinates = self.projection(coordinates)
        return tuple(self.algebra.field.coerce(x) for x in coordinates)


@log_time()
def build_gl(m: int, n: int) -> MatrixAlgebra:
    if m < 0 or n < 0 or m + n == 0:
        raise InvalidPartitionError(f"gl({m}|{n}) needs m, n >= 0 and m + n > 0")
    return MatrixAlgebra(_gl_algebra(m, n), m, n, "gl")


@cache
def _sl_embedding(m: int, n: int) -> Embedding:
    gl = _gl_algebra(m, n)
    size = m + n
    supertrace = {gl_index(a, a, size): (1 if a < m else -1) for a in range(size)}
    echelon = Echelon(gl.dim)
    echelon.add(supertrace)
    return subalgebra(gl, echelon.kernel(), f"sl({m}|{n})")


@log_time()
def build_sl(m: int, n: int) -> MatrixAlgebra:
    if m < 0 or n < 0 or m + n < 2:
        raise InvalidPartitionError(f"sl({m}|{n}) needs m + n >= 2")
    embedding = _sl_embedding(m, n)
    return MatrixAlgebra(embedding.algebra, m, n, "sl", embedding.subspace)


@cache
def _psl_quotient(n: int) -> tuple[SuperAlgebra, Projection]:
    embedding = _sl_embedding(n, n)
    size = 2 * n
    identity = flatten({(a, a): 1 for a in range(size)}, size)
    center = span([embedding.subspace.coordinates(identity)], embedding.algebra.dim)
    return quotient(embedding.algebra, center, name=f"psl({n}|{n})")


@log_time()
def build_psl(n: int) -> MatrixAlgebra:
    if n < 2:
        raise InvalidPartitionError("psl(n|n) needs n >= 2; sl(1|1)/CI is not simple")
    algebra, projection = _psl_quotient(n)
    return MatrixAlgebra(
        algebra, n, n, "psl", _sl_embedding(n, n).subspace, projection
    )


def osp_involution(partition: SuperPartition) -> tuple[int, ...]:
    """
    i -> i* on 0-based part indices. A part is paired with itself exactly when parity + size is
    odd; the remaining equal parts pair off with their neighbours.
    """
    partition.validate_osp()
    star = list(range(len(partition)))
    waiting: dict[tuple[int, int], int] = {}
    for i, (size, parity) in enumerate(partition.parts):
        if (size + parity) % 2:
            continue
        key = (size, parity)
        if key in waiting:
            partner = waiting.pop(key)
            star[i], star[partner] = partner, i
        else:
            waiting[key] = i
    return tuple(star)


def osp_theta(partition: SuperPartition) -> tuple[int, ...]:
    "Signs making the pyramid form supersymmetric: theta_{i*} = (-1)^{p_i + lambda_i - 1} theta_i."
    star = osp_involution(partition)
    theta = [1] * len(partition)
    for i, partner in enumerate(star):
        if partner < i:
            size, parity = partition.parts[i]
            theta[i] = -1 if (size + parity - 1) % 2 else 1
    return tuple(theta)


def gram_matrix(partition: SuperPartition) -> dict[tuple[int, int], int]:
    """
    <e^a v_i, e^b v_j> = (-1)^a theta_i when j = i* and a + b = lambda_i - 1, in standard indices.
    """
    P = pyramid(partition)
    star = osp_involution(partition)
    theta = osp_theta(partition)
    gram = {}
    for i, (size, _) in enumerate(partition.parts):
        for a in range(size):
            left = P.box(i, a).index
            right = P.box(star[i], size - 1 - a).index
            gram[(left, right)] = (-1) ** a * theta[i]
    return gram


@cache
def _osp_embedding(partition: SuperPartition) -> Embedding:
    """
    x in gl preserves the form: <xu, w> + (-1)^{|x||u|} <u, xw> = 0 for all basis u, w.
    """
    size = partition.m + partition.n
    parity = _standard_parities(partition.m, partition.n)
    gram = gram_matrix(partition)
    by_row: dict[int, list[tuple[int, int]]] = {}
    by_column: dict[int, list[tuple[int, int]]] = {}
    for (r, c), value in gram.items():
        by_row.setdefault(r, []).append((c, value))
        by_column.setdefault(c, []).append((r, value))

    gl = _gl_algebra(partition.m, partition.n)
    echelon = Echelon(gl.dim)
    for u in range(size):
        for w in range(size):
            sign = -1 if (parity[u] + parity[w]) * parity[u] % 2 else 1
            row: dict[int, int] = {}
            # sum_a x_{au} G[a][w]
            for a, value in by_column.get(w, ()):
                key = gl_index(a, u, size)
                row[key] = row.get(key, 0) + value
            # sign * sum_a G[u][a] x_{aw}
            for a, value in by_row.get(u, ()):
                key = gl_index(a, w, size)
                row[key] = row.get(key, 0) + sign * value
            row = {k: v for k, v in row.items() if v}
            if row:
                echelon.add(row)

    name = f"osp({partition.m}|{partition.n})"
    log.debug(f"solved form equations for {name}", partition=str(partition))
    return subalgebra(gl, echelon.kernel(), name)


@log_time()
def osp_for_partition(partition: SuperPartition) -> MatrixAlgebra:
    "osp(m|n) realised as the stabiliser of the form adapted to `partition`."
    partition.validate_osp()
    embedding = _osp_embedding(partition)
    return MatrixAlgebra(
        embedding.algebra,
        partition.m,
        partition.n,
        "osp",
        embedding.subspace,
        partition=partition,
    )


def build_osp(m: int, n2: int) -> MatrixAlgebra:
    "osp(m|2*n2) for the standard form: symmetric on the even part, symplectic on the odd part."
    if m < 0 or n2 < 0 or m + n2 == 0:
        raise InvalidPartitionError(f"osp({m}|{2 * n2}) needs m, n2 >= 0")
    return osp_for_partition(SuperPartition.from_parts((1,) * m, (1,) * (2 * n2)))


def matrix_algebra(family: str, partition: SuperPartition) -> MatrixAlgebra:
    "The algebra of `family` whose nilpotent orbits are labelled by `partition`."
    match family:
        case "gl":
            return build_gl(partition.m, partition.n)
        case "sl":
            return build_sl(partition.m, partition.n)
        case "psl":
            if partition.m != partition.n:
                raise InvalidPartitionError(f"psl needs a partition of (n|n), got ({partition})")
            return build_psl(partition.n)
        case "osp":
            return osp_for_partition(partition)
        case _:
            raise ValueError(f"unknown family '{family}', expected one of {', '.join(FAMILIES)}")


@dataclass(frozen=True, eq=False)
class NilpotentData:
    algebra: MatrixAlgebra
    partition: SuperPartition
    pyramid: DynkinPyramid
    e_matrix: SparseMatrix
    h_matrix: SparseMatrix
    f_matrix: SparseMatrix
    e: Vector
    h: Vector
    f: Vector

    def power(self, exponent: int) -> Vector:
        "e^exponent as an element of the algebra."
        return self.algebra.lift_to_algebra(
            matrix_power(self.e_matrix, exponent, self.algebra.size)
        )


def triple_matrices(P: DynkinPyramid) -> tuple[SparseMatrix, SparseMatrix, SparseMatrix]:
    """
    e(e^a v) = e^{a+1} v, h(e^a v) = (2a - lambda + 1) e^a v, f(e^a v) = a(lambda - a) e^{a-1} v.
    """
    e: SparseMatrix = {}
    h: SparseMatrix = {}
    f: SparseMatrix = {}
    for part, (size, _) in enumerate(P.partition.parts):
        for a in range(size):
            source = P.box(part, a).index
            if (weight := 2 * a - size + 1) != 0:
                h[(source, source)] = weight
            if a + 1 < size:
                e[(P.box(part, a + 1).index, source)] = 1
            if a > 0:
                f[(P.box(part, a - 1).index, source)] = a * (size - a)
    return e, h, f


def nilpotent_from_pyramid(P: DynkinPyramid, family: str = "sl") -> NilpotentData:
    algebra = matrix_algebra(family, P.partition)
    e, h, f = triple_matrices(P)
    return NilpotentData(
        algebra,
        P.partition,
        P,
        e,
        h,
        f,
        algebra.lift_to_algebra(e),
        algebra.lift_to_algebra(h),
        algebra.lift_to_algebra(f),
    )


def nilpotent(family: str, partition: SuperPartition | str) -> NilpotentData:
    if isinstance(partition, str):
        partition = SuperPartition.parse(partition)
    return nilpotent_from_pyramid(pyramid(partition), family)


@dataclass(frozen=True)
class XiElement:
    """
    xi_i^{j,k}: sends v_i to e^k v_j, commutes with e and kills the other generators.
    Part indices are 0-based; `label` prints them 1-based.
    """

    i: int
    j: int
    k: int
    grade: int
    parity: int
    matrix: tuple[tuple[tuple[int, int], int], ...]

    @property
    def label(self) -> str:
        return f"xi_{self.i + 1}^{{{self.j + 1},{self.k}}}"

    def as_matrix(self) -> SparseMatrix:
        return dict(self.matrix)


def xi_element(P: DynkinPyramid, i: int, j: int, k: int) -> XiElement:
    sizes = P.partition.sizes
    if not (max(sizes[j] - sizes[i], 0) <= k <= sizes[j] - 1):
        raise ValueError(f"xi_{i + 1}^{{{j + 1},{k}}} is out of range for {P.partition}")

    entries = tuple(
        ((P.box(j, a + k).index, P.box(i, a).index), 1)
        for a in range(sizes[i])
        if a + k < sizes[j]
    )
    parities = P.partition.parities
    return XiElement(
        i, j, k, sizes[i] - sizes[j] + 2 * k, (parities[i] + parities[j]) % 2, entries
    )


def xi_basis(partition: SuperPartition) -> list[XiElement]:
    P = pyramid(partition)
    sizes = partition.sizes
    return [
        xi_element(P, i, j, k)
        for i in range(len(partition))
        for j in range(len(partition))
        for k in range(max(sizes[j] - sizes[i], 0), sizes[j])
    ]


def epsilon(i: int, j: int, k: int, partition: SuperPartition) -> int:
    """
    Sign with xi_i^{j,lambda_j-1-k} + eps * xi_{j*}^{i*,lambda_i-1-k} in osp, for
    0 <= k < min(lambda_i, lambda_j).
    """
    sizes = partition.sizes
    if not (0 <= i < len(sizes) and 0 <= j < len(sizes)):
        raise ValueError(f"part index out of range for {partition}")
    if not (0 <= k < min(sizes[i], sizes[j])):
        raise ValueError(f"k={k} out of range for parts {i + 1}, {j + 1} of {partition}")

    theta = osp_theta(partition)
    p_i, p_j = partition.parities[i], partition.parities[j]
    exponent = sizes[j] - k + (p_i + p_j) * p_i
    return (-1 if exponent % 2 else 1) * theta[i] * theta[j]


def osp_combination(
    P: DynkinPyramid, i: int, j: int, k: int, sign: int | None = None
) -> SparseMatrix:
    "xi_i^{j,lambda_j-1-k} + eps_{i,j,k} xi_{j*}^{i*,lambda_i-1-k} as a gl matrix."
    partition = P.partition
    star = osp_involution(partition)
    sizes = partition.sizes
    if sign is None:
        sign = epsilon(i, j, k, partition)

    result = dict(xi_element(P, i, j, sizes[j] - 1 - k).as_matrix())
    for key, value in xi_element(P, star[j], star[i], sizes[i] - 1 - k).as_matrix().items():
        updated = result.get(key, 0) + sign * value
        if updated:
            result[key] = updated
        else:
            result.pop(key, None)
    return result


@dataclass(frozen=True)
class OspDecomposition:
    """
    Spanning pieces of g^e in osp: the abelian part split by the parity of lambda - k, the pieces
    pairing a part with its partner, and the pieces pairing different parts with N2 = N2- + N2+.
    """

    abelian_even: Subspace
    abelian_odd: Subspace
    n1: Subspace
    n2: Subspace
    n2_minus: Subspace
    n2_plus: Subspace

    @property
    def abelian(self) -> Subspace:
        return _sum(self.abelian_even, self.abelian_odd)

    def total(self) -> Subspace:
        return _sum(self.abelian, self.n1, self.n2)


def _sum(*spaces: Subspace) -> Subspace:
    return span((row for space in spaces for row in space.basis), spaces[0].ambient_dim)


def _n2_minus_position(partition: SuperPartition, star: tuple[int, ...], i: int) -> bool:
    "lambda_{i-1} > lambda_i >= lambda_{i+1} > lambda_{i+2} for self-paired i and i+1."
    sizes = partition.sizes
    if i + 1 >= len(sizes) or star[i] != i or star[i + 1] != i + 1:
        return False
    before = sizes[i - 1] if i > 0 else float("inf")
    after = sizes[i + 2] if i + 2 < len(sizes) else 0
    return before > sizes[i] >= sizes[i + 1] > after


def osp_decomposition(data: NilpotentData) -> OspDecomposition:
    partition = data.partition.validate_osp()
    algebra = data.algebra
    P = data.pyramid
    star = osp_involution(partition)
    sizes = partition.sizes
    dim = algebra.algebra.dim

    abelian_even: list[Vector] = []
    abelian_odd: list[Vector] = []
    n1: list[Vector] = []
    n2_minus: list[Vector] = []
    n2_plus: list[Vector] = []

    def lift(i: int, j: int, k: int) -> Vector:
        return algebra.lift_to_algebra(osp_combination(P, i, j, k))

    for i, size in enumerate(sizes):
        if star[i] != i:
            n1.extend(lift(i, star[i], k) for k in range(size) if (size - k) % 2)
        if star[i] < i:
            continue
        for k in range(size):
            if star[i] == i and (size - k) % 2:
                continue
            target = abelian_even if (size - k) % 2 == 0 else abelian_odd
            target.append(lift(i, i, k))

    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            if j == star[i]:
                continue
            minus = j == i + 1 and _n2_minus_position(partition, star, i)
            for k in range(min(sizes[i], sizes[j])):
                if minus and k == sizes[j] - 1:
                    n2_minus.append(lift(i, j, k))
                else:
                    n2_plus.append(lift(i, j, k))

    pieces = [
        span(vectors, dim) for vectors in (abelian_even, abelian_odd, n1, n2_minus, n2_plus)
    ]
    return OspDecomposition(
        abelian_even=pieces[0],
        abelian_odd=pieces[1],
        n1=pieces[2],
        n2=_sum(pieces[3], pieces[4]),
        n2_minus=pieces[3],
        n2_plus=pieces[4],
    )


@dataclass(frozen=True)
class DimFormulas:
    gl: int
    gl_even: int
    gl_odd: int
    sl: int
    psl: int | None

    def to_dict(self) -> dict[str, int | None]:
        return {
            "dim_gl_e": self.gl,
            "dim_gl_e_even": self.gl_even,
            "dim_gl_e_odd": self.gl_odd,
            "dim_sl_e": self.sl,
            "dim_psl_e": self.psl,
        }


def dim_formulas(partition: SuperPartition) -> DimFormulas:
    """
    dim gl^e = sum of min(lambda_i, lambda_j) over ordered pairs of parts, split by parity. The
    psl value counts boxes per integer column: sum c_i^2 + sum c_i c_{i+1} - 2.
    """
    even = odd = 0
    for (size_i, parity_i), (size_j, parity_j) in product(partition.parts, repeat=2):
        if parity_i == parity_j:
            even += min(size_i, size_j)
        else:
            odd += min(size_i, size_j)

    psl = None
    if partition.m == partition.n:
        counts = pyramid(partition).column_counts()
        columns = sorted(counts)
        psl = (
            sum(counts[col][0] ** 2 for col in columns)
            + sum(counts[a][0] * counts[b][0] for a, b in pairwise(columns))
            - 2
        )

    return DimFormulas(even + odd, even, odd, even + odd - 1, psl)
