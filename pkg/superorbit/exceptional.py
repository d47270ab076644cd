"""
The exceptional basic classical superalgebras D(2,1;a), G(3) and F(4).

Each is assembled from a matrix-realized even part g0, an odd module g1 given as a tensor product
of g0-modules, and an odd-odd bracket g1 x g1 -> g0. The odd-odd bracket is not written out: it is
the unique symmetric g0-equivariant map that satisfies the odd Jacobi identity and a handful of
calibration commutators, recovered by one linear solve.
"""

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import product

from .cache import cached_algebra
from .errors import BracketSolveError, ConstructionError, UnknownOrbitError
from .field import QQ_ALPHA_FIELD, QQ_FIELD, Scalar, ScalarField
from .linalg import Echelon, SparseVector, Vector
from .log import log
from .superalg import (
    SparseMatrix,
    SuperAlgebra,
    characteristic,
    check_super_jacobi,
    from_brackets,
    from_matrices,
    matrix_product,
    supercommutator,
)
from .timing import log_time

Anchor = tuple[SparseVector, SparseVector, SparseVector]
Weight = tuple[Scalar, ...]

# sl(2) on V = span(v1, v-1)
SL2_E: SparseMatrix = {(0, 1): 1}
SL2_H: SparseMatrix = {(0, 0): 1, (1, 1): -1}
SL2_F: SparseMatrix = {(1, 0): 1}
SL2_NAMES = ("v1", "v-1")


@dataclass(frozen=True)
class EquivariantBracketProblem:
    """
    Unknown odd-odd bracket of an algebra g0 + g1.

    `action[x]` is the matrix of the even basis element x on g1, keyed (target, source). Anchors
    are triples (u, v, w) demanding [u, v] = w, with u, v in odd coordinates and w in even ones.
    `cartan` lists even basis indices that act diagonally on both g0 and g1.
    """

    even: SuperAlgebra
    odd_names: tuple[str, ...]
    action: tuple[SparseMatrix, ...]
    anchors: tuple[Anchor, ...]
    cartan: tuple[int, ...]
    field: ScalarField = QQ_FIELD

    @property
    def even_dim(self) -> int:
        return self.even.dim

    @property
    def odd_dim(self) -> int:
        return len(self.odd_names)

    def homomorphism_defects(self) -> list[tuple[str, str]]:
        "Even basis pairs with action([x, y]) != [action(x), action(y)]."
        defects = []
        for x in range(self.even_dim):
            for y in range(x + 1, self.even_dim):
                expected: SparseMatrix = {}
                for k, c in self.even.structure.get((x, y), {}).items():
                    for key, value in self.action[k].items():
                        expected[key] = expected.get(key, 0) + c * value
                expected = {key: value for key, value in expected.items() if value}
                actual = supercommutator(self.action[x], self.action[y], 0, 0)
                if actual != expected:
                    defects.append((self.even.basis_names[x], self.even.basis_names[y]))
        return defects


def _columns(matrix: SparseMatrix, size: int) -> list[list[tuple[int, Scalar]]]:
    "Per source index, the (target, value) entries of a sparse matrix."
    columns: list[list[tuple[int, Scalar]]] = [[] for _ in range(size)]
    for (target, source), value in matrix.items():
        if value:
            columns[source].append((target, value))
    return columns


def _weights(problem: EquivariantBracketProblem) -> tuple[list[Weight], list[Weight]]:
    even_weights: list[list[Scalar]] = [[] for _ in range(problem.even_dim)]
    odd_weights: list[list[Scalar]] = [[] for _ in range(problem.odd_dim)]

    for t in problem.cartan:
        name = problem.even.basis_names[t]
        for k in range(problem.even_dim):
            entry = problem.even.structure.get((t, k), {})
            if set(entry) - {k}:
                raise ConstructionError(f"ad {name} is not diagonal on the even basis")
            even_weights[k].append(Fraction(entry.get(k, 0)))

        diagonal = [Fraction(0)] * problem.odd_dim
        for (target, source), value in problem.action[t].items():
            if target != source and value:
                raise ConstructionError(f"{name} does not act diagonally on the odd basis")
            diagonal[source] += value
        for a, value in enumerate(diagonal):
            odd_weights[a].append(value)

    return [tuple(w) for w in even_weights], [tuple(w) for w in odd_weights]


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a <= b else (b, a)


def _add_term(row: dict[int, Scalar], column: int, value: Scalar):
    updated = row.get(column, 0) + value
    if updated:
        row[column] = updated
    else:
        row.pop(column, None)


@log_time()
def solve_odd_bracket(
    problem: EquivariantBracketProblem,
) -> dict[tuple[int, int], SparseVector]:
    """
    The odd-odd bracket as {(a, b): [u_a, u_b]} for a <= b, in even coordinates.

    Unknowns are the coefficients B[a, b, k] of [u_a, u_b] along the even basis element k, kept only
    where the weights allow them. Rows come from equivariance under the non-Cartan even basis, the
    Jacobi identity on odd triples and the anchors, the last with a right-hand side column.
    """
    even_weights, odd_weights = _weights(problem)
    even_by_weight: dict[Weight, list[int]] = {}
    for k, weight in enumerate(even_weights):
        even_by_weight.setdefault(weight, []).append(k)

    unknowns: list[tuple[int, int, int]] = []
    pair_unknowns: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for a in range(problem.odd_dim):
        for b in range(a, problem.odd_dim):
            weight = tuple(x + y for x, y in zip(odd_weights[a], odd_weights[b], strict=True))
            for k in even_by_weight.get(weight, ()):
                pair_unknowns.setdefault((a, b), []).append((k, len(unknowns)))
                unknowns.append((a, b, k))

    rhs = len(unknowns)
    coerce = problem.field.coerce
    echelon = Echelon(rhs + 1)
    columns = [_columns(matrix, problem.odd_dim) for matrix in problem.action]

    def add_rows(rows: Mapping[int, dict[int, Scalar]]):
        for row in rows.values():
            if row:
                echelon.add({column: coerce(value) for column, value in row.items()})

    # [x, [u_a, u_b]] = [x u_a, u_b] + [u_a, x u_b]
    cartan = set(problem.cartan)
    for x in range(problem.even_dim):
        if x in cartan:
            continue
        ad_x = {
            k: problem.even.structure.get((x, k), {}) for k in range(problem.even_dim)
        }
        for a in range(problem.odd_dim):
            for b in range(a, problem.odd_dim):
                rows: dict[int, dict[int, Scalar]] = {}
                for k, column in pair_unknowns.get((a, b), ()):
                    for target, value in ad_x[k].items():
                        _add_term(rows.setdefault(target, {}), column, value)
                for moved, fixed in ((a, b), (b, a)):
                    for c, value in columns[x][moved]:
                        for target, column in pair_unknowns.get(_pair(c, fixed), ()):
                            _add_term(rows.setdefault(target, {}), column, -value)
                add_rows(rows)

    # [u, [v, w]] + [v, [w, u]] + [w, [u, v]] = 0 on odd triples
    for u in range(problem.odd_dim):
        for v in range(u, problem.odd_dim):
            for w in range(v, problem.odd_dim):
                rows = {}
                for p, q, r in ((v, w, u), (u, w, v), (u, v, w)):
                    for k, column in pair_unknowns.get((p, q), ()):
                        for m, value in columns[k][r]:
                            _add_term(rows.setdefault(m, {}), column, value)
                add_rows(rows)

    for left, right, value in problem.anchors:
        rows = {}
        for a, x in left.items():
            for b, y in right.items():
                for k, column in pair_unknowns.get(_pair(a, b), ()):
                    _add_term(rows.setdefault(k, {}), column, x * y)
        for k, target in value.items():
            _add_term(rows.setdefault(k, {}), rhs, -target)
        add_rows(rows)

    log.debug(
        f"solved odd bracket of {problem.even.name}",
        unknowns=rhs,
        rank=echelon.rank,
    )

    def describe(column: int) -> str:
        a, b, k = unknowns[column]
        names = problem.odd_names
        return f"[{names[a]}, {names[b]}] along {problem.even.basis_names[k]}"

    pivots = set(echelon.pivots)
    if rhs in pivots:
        raise BracketSolveError(
            "anchors are inconsistent with equivariance and the Jacobi identity",
            defect=[describe(column) for column in sorted(pivots - {rhs})][:10],
        )

    free = [column for column in range(rhs) if column not in pivots]
    if free:
        raise BracketSolveError(
            f"odd bracket is underdetermined: {len(free)} free coefficients",
            defect=[describe(column) for column in free],
        )

    brackets: dict[tuple[int, int], SparseVector] = {}
    for column, (a, b, k) in enumerate(unknowns):
        coefficient = -echelon.row(column).get(rhs, 0)
        if coefficient:
            brackets.setdefault((a, b), {})[k] = coefficient
    return brackets


def assemble(
    name: str,
    problem: EquivariantBracketProblem,
    odd_brackets: Mapping[tuple[int, int], SparseVector],
) -> SuperAlgebra:
    "Glue g0, its action on g1 and the odd-odd bracket into one algebra and check Jacobi."
    even_dim = problem.even_dim
    names = problem.even.basis_names + problem.odd_names
    parities = (0,) * even_dim + (1,) * problem.odd_dim

    brackets: dict[tuple[int | str, int | str], Mapping[int | str, Scalar]] = {}
    for key, value in problem.even.structure.items():
        if key[0] <= key[1]:
            brackets[key] = value
    for x, matrix in enumerate(problem.action):
        for source, entries in enumerate(_columns(matrix, problem.odd_dim)):
            if entries:
                brackets[(x, even_dim + source)] = {
                    even_dim + target: value for target, value in entries
                }
    for (a, b), value in odd_brackets.items():
        brackets[(even_dim + a, even_dim + b)] = value

    algebra = from_brackets(name, names, parities, brackets, problem.field)
    if violations := check_super_jacobi(algebra):
        raise ConstructionError(
            f"{name} violates the super Jacobi identity, e.g. on {violations[0]}"
        )
    return algebra


def _block_diagonal(blocks: Sequence[SparseMatrix], sizes: Sequence[int]) -> SparseMatrix:
    matrix: SparseMatrix = {}
    offset = 0
    for block, size in zip(blocks, sizes, strict=True):
        for (r, c), value in block.items():
            matrix[(offset + r, offset + c)] = value
        offset += size
    return matrix


def _tensor_action(factors: Sequence[SparseMatrix], dims: Sequence[int]) -> SparseMatrix:
    "Action on the tensor product where each factor matrix acts on its own slot."
    positions = list(product(*(range(d) for d in dims)))
    index = {position: i for i, position in enumerate(positions)}

    matrix: SparseMatrix = {}
    for slot, factor in enumerate(factors):
        for position in positions:
            for (target, source), value in factor.items():
                if position[slot] != source:
                    continue
                moved = (*position[:slot], target, *position[slot + 1 :])
                key = (index[moved], index[position])
                updated = matrix.get(key, 0) + value
                if updated:
                    matrix[key] = updated
                else:
                    matrix.pop(key, None)
    return matrix


def _tensor_names(*factors: Sequence[str]) -> tuple[str, ...]:
    return tuple("*".join(names) for names in product(*factors))


def _basis_index(names: Sequence[str]) -> dict[str, int]:
    return {name: i for i, name in enumerate(names)}


def _problem(
    even: SuperAlgebra,
    odd_names: tuple[str, ...],
    action: Sequence[SparseMatrix],
    anchors: Sequence[tuple[Mapping[str, Scalar], Mapping[str, Scalar], Mapping[str, Scalar]]],
    cartan: Sequence[str],
    field: ScalarField = QQ_FIELD,
) -> EquivariantBracketProblem:
    odd_index = _basis_index(odd_names)
    resolved = tuple(
        (
            {odd_index[name]: c for name, c in left.items()},
            {odd_index[name]: c for name, c in right.items()},
            {even.index(name): field.coerce(c) for name, c in value.items()},
        )
        for left, right, value in anchors
    )
    problem = EquivariantBracketProblem(
        even,
        odd_names,
        tuple(action),
        resolved,
        tuple(even.index(name) for name in cartan),
        field,
    )
    if defects := problem.homomorphism_defects():
        raise ConstructionError(f"odd module of {even.name} is not a representation: {defects[0]}")
    return problem


# D(2,1;a)


def sigma(field: ScalarField) -> tuple[Scalar, Scalar, Scalar]:
    "The structure triple (1 + a, -1, -a) fixing D(2,1;a)."
    alpha = field.coerce(field.alpha)
    return (field.one + alpha, -field.one, -alpha)


def d21_name(field: ScalarField) -> str:
    return "D(2,1;a)" if field.symbolic else f"D(2,1;{field.alpha})"


def _d21_even() -> tuple[SuperAlgebra, list[list[SparseMatrix]]]:
    names, matrices, factors = [], [], []
    for slot in range(3):
        for letter, block in (("E", SL2_E), ("H", SL2_H), ("F", SL2_F)):
            blocks: list[SparseMatrix] = [{}, {}, {}]
            blocks[slot] = block
            names.append(f"{letter}{slot + 1}")
            matrices.append(_block_diagonal(blocks, (2, 2, 2)))
            factors.append(blocks)
    even = from_matrices("sl2+sl2+sl2", names, (0,) * 9, matrices, 6)
    return even, factors


D21_X = {"v1*v1*v-1": 1, "v-1*v1*v1": -1}
D21_Y = {"v1*v-1*v1": 1, "v-1*v1*v1": -1}


@log_time()
def _build_D21(field: ScalarField) -> SuperAlgebra:
    even, factors = _d21_even()
    odd_names = _tensor_names(SL2_NAMES, SL2_NAMES, SL2_NAMES)
    action = [_tensor_action(blocks, (2, 2, 2)) for blocks in factors]
    s1, s2, _ = sigma(field)
    problem = _problem(
        even,
        odd_names,
        action,
        [
            ({"v1*v1*v1": 1}, {"v1*v-1*v-1": 1}, {"E1": 2 * s1}),
            (D21_X, D21_X, {"E2": 4 * s2}),
        ],
        ("H1", "H2", "H3"),
        field,
    )
    return assemble(d21_name(field), problem, solve_odd_bracket(problem))


@cache
def build_D21(field: ScalarField = QQ_ALPHA_FIELD) -> SuperAlgebra:
    "D(2,1;a) over QQ(a), or at a rational sample of a when given a RationalField."
    key = "D21-symbolic" if field.symbolic else f"D21-{field.alpha}"
    return cached_algebra(key, lambda: _build_D21(field))


# G(3)

# V7 basis e3, e2, e1, e0, e-1, e-2, e-3
G2_VECTOR_NAMES = ("e3", "e2", "e1", "e0", "e-1", "e-2", "e-3")

G2_BASIS = ("h1", "h2", *(f"x{i}" for i in range(1, 7)), *(f"y{i}" for i in range(1, 7)))

G2_GENERATORS: dict[str, SparseMatrix] = {
    "h1": {(0, 0): 1, (1, 1): -1, (2, 2): 2, (4, 4): -2, (5, 5): 1, (6, 6): -1},
    "h2": {(1, 1): 1, (2, 2): -1, (4, 4): 1, (5, 5): -1},
    "x1": {(0, 1): -1, (2, 3): 1, (3, 4): -2, (5, 6): 1},
    "x2": {(1, 2): 1, (4, 5): -1},
    "y1": {(1, 0): -1, (3, 2): 2, (4, 3): -1, (6, 5): 1},
    "y2": {(2, 1): 1, (5, 4): -1},
}


def _commutator(x: SparseMatrix, y: SparseMatrix) -> SparseMatrix:
    return supercommutator(x, y, 0, 0)


def g2_matrices() -> dict[str, SparseMatrix]:
    "h1, h2 and root vectors x1..x6, y1..y6 of G2 acting on V7."
    m = dict(G2_GENERATORS)
    for sign in ("x", "y"):
        m[f"{sign}3"] = _commutator(m[f"{sign}1"], m[f"{sign}2"])
        m[f"{sign}4"] = _commutator(m[f"{sign}1"], m[f"{sign}3"])
        m[f"{sign}5"] = _commutator(m[f"{sign}1"], m[f"{sign}4"])
        m[f"{sign}6"] = _commutator(m[f"{sign}5"], m[f"{sign}2"])
    return {name: m[name] for name in G2_BASIS}


@log_time()
def build_g2() -> SuperAlgebra:
    matrices = g2_matrices()
    return from_matrices("G2", G2_BASIS, (0,) * 14, list(matrices.values()), 7)


def _g3_even() -> tuple[SuperAlgebra, list[list[SparseMatrix]]]:
    names = ["E", "H", "F", *G2_BASIS]
    factors = [[SL2_E, {}], [SL2_H, {}], [SL2_F, {}]]
    factors += [[{}, matrix] for matrix in g2_matrices().values()]
    matrices = [_block_diagonal(blocks, (2, 7)) for blocks in factors]
    return from_matrices("sl2+G2", names, (0,) * 17, matrices, 9), factors


@log_time()
def _build_G3() -> SuperAlgebra:
    even, factors = _g3_even()
    odd_names = _tensor_names(SL2_NAMES, G2_VECTOR_NAMES)
    action = [_tensor_action(blocks, (2, 7)) for blocks in factors]
    problem = _problem(
        even,
        odd_names,
        action,
        [({"v1*e3": 1}, {"v1*e-3": 1}, {"E": 16})],
        ("H", "h1", "h2"),
    )
    return assemble("G(3)", problem, solve_odd_bracket(problem))


@cache
def build_G3() -> SuperAlgebra:
    return cached_algebra("G3", _build_G3)


# F(4)

SO7_ORDER = ("e1", "e2", "e3", "e0", "e-1", "e-2", "e-3")
SPINOR_SUBSETS = ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))
SPINOR_NAMES = tuple("".join(f"e{i}" for i in subset) + "s" for subset in SPINOR_SUBSETS)


def _so7_index(vector: str) -> int:
    "Position of e_i in the basis e3, e2, e1, e0, e-1, e-2, e-3."
    return 3 - int(vector[1:])


def _beta(a: str, b: str) -> int:
    i, j = int(a[1:]), int(b[1:])
    if i == j == 0:
        return 2
    return 1 if i == -j and i != 0 else 0


def r_name(a: str, b: str) -> str:
    return f"R({a},{b})"


SO7_BASIS = tuple(
    r_name(a, b)
    for position, a in enumerate(SO7_ORDER)
    for b in SO7_ORDER[position + 1 :]
)


def r_matrix(a: str, b: str) -> SparseMatrix:
    "R(a,b) v = beta(b, v) a - beta(a, v) b on V7."
    matrix: SparseMatrix = {}
    for c in SO7_ORDER:
        column = _so7_index(c)
        for target, scale in ((a, _beta(b, c)), (b, -_beta(a, c))):
            if scale:
                key = (_so7_index(target), column)
                matrix[key] = matrix.get(key, 0) + scale
    return {key: value for key, value in matrix.items() if value}


def clifford_matrix(vector: str) -> SparseMatrix:
    """
    e_i wedges, e_-i contracts and e0 acts by (-1)^degree on the exterior algebra of
    span(e1, e2, e3). These satisfy C(u)C(v) + C(v)C(u) = beta(u, v).
    """
    i = int(vector[1:])
    index = {subset: k for k, subset in enumerate(SPINOR_SUBSETS)}
    matrix: SparseMatrix = {}
    for source, subset in enumerate(SPINOR_SUBSETS):
        if i == 0:
            matrix[(source, source)] = -1 if len(subset) % 2 else 1
            continue
        sign = -1 if sum(1 for j in subset if j < abs(i)) % 2 else 1
        if i > 0 and i not in subset:
            matrix[(index[tuple(sorted((*subset, i)))], source)] = sign
        elif i < 0 and -i in subset:
            matrix[(index[tuple(j for j in subset if j != -i)], source)] = sign
    return matrix


def spin_matrix(a: str, b: str) -> SparseMatrix:
    "R(a,b) on spinors: C(a)C(b) - beta(a, b)/2."
    matrix = dict(matrix_product(clifford_matrix(a), clifford_matrix(b)))
    if shift := _beta(a, b):
        for k in range(len(SPINOR_SUBSETS)):
            matrix[(k, k)] = matrix.get((k, k), 0) - Fraction(shift, 2)
    return {key: value for key, value in matrix.items() if value}


def _so7_pairs() -> list[tuple[str, str]]:
    return [
        (a, b) for position, a in enumerate(SO7_ORDER) for b in SO7_ORDER[position + 1 :]
    ]


@log_time()
def build_spin7() -> tuple[SuperAlgebra, tuple[SparseMatrix, ...]]:
    "so(7) on V7 together with its action on the eight spinors."
    pairs = _so7_pairs()
    so7 = from_matrices("so7", SO7_BASIS, (0,) * 21, [r_matrix(a, b) for a, b in pairs], 7)
    spin = tuple(spin_matrix(a, b) for a, b in pairs)

    problem = EquivariantBracketProblem(so7, SPINOR_NAMES, spin, (), ())
    if defects := problem.homomorphism_defects():
        raise ConstructionError(f"spin action is not a representation: {defects[0]}")
    return so7, spin


def _f4_even() -> tuple[SuperAlgebra, list[list[SparseMatrix]]]:
    pairs = _so7_pairs()
    names = ["E", "H", "F", *SO7_BASIS]
    defining = [[SL2_E, {}], [SL2_H, {}], [SL2_F, {}]]
    defining += [[{}, r_matrix(a, b)] for a, b in pairs]
    matrices = [_block_diagonal(blocks, (2, 7)) for blocks in defining]
    even = from_matrices("sl2+so7", names, (0,) * 24, matrices, 9)

    _, spin = build_spin7()
    factors = [[SL2_E, {}], [SL2_H, {}], [SL2_F, {}]]
    factors += [[{}, matrix] for matrix in spin]
    return even, factors


@log_time()
def _build_F4() -> SuperAlgebra:
    even, factors = _f4_even()
    odd_names = _tensor_names(SL2_NAMES, SPINOR_NAMES)
    action = [_tensor_action(blocks, (2, 8)) for blocks in factors]
    problem = _problem(
        even,
        odd_names,
        action,
        [({"v1*e1s": 1}, {"v1*e2e3s": 1}, {"E": -6})],
        ("H", "R(e1,e-1)", "R(e2,e-2)", "R(e3,e-3)"),
    )
    return assemble("F(4)", problem, solve_odd_bracket(problem))


@cache
def build_F4() -> SuperAlgebra:
    return cached_algebra("F4", _build_F4)


# orbit representatives

EXCEPTIONAL = ("D21", "G3", "F4")

ORBIT_LABELS: dict[str, tuple[str, ...]] = {
    "D21": ("0", "E1", "E2", "E3", "E1+E2", "E1+E3", "E2+E3", "E1+E2+E3"),
    "G3": (
        "E+(x1+x2)",
        "E+x2",
        "E+x1",
        "E+(x2+x5)",
        "E",
        "x1+x2",
        "x2",
        "x1",
        "x2+x5",
        "0",
    ),
    "F4": (
        "E+(R(e1,e-2)+R(e2,e-3)+R(e3,e0))",
        "E+(R(e1,e-2)+R(e2,e0))",
        "E+(R(e1,e-3)+R(e2,e3))",
        "E+(R(e1,e0)+R(e2,e3))",
        "E+R(e1,e0)",
        "E+R(e1,e2)",
        "E",
        "R(e1,e-2)+R(e2,e-3)+R(e3,e0)",
        "R(e1,e-2)+R(e2,e0)",
        "R(e1,e-3)+R(e2,e3)",
        "R(e1,e0)+R(e2,e3)",
        "R(e1,e0)",
        "R(e1,e2)",
        "0",
    ),
}

CARTAN: dict[str, tuple[str, ...]] = {
    "D21": ("H1", "H2", "H3"),
    "G3": ("H", "h1", "h2"),
    "F4": ("H", "R(e1,e-1)", "R(e2,e-2)", "R(e3,e-3)"),
}

_TERM = re.compile(r"R\(e-?\d,e-?\d\)|[EHF]\d?|[xy]\d|0")
_R_TERM = re.compile(r"R\((e-?\d),(e-?\d)\)")


@dataclass(frozen=True)
class OrbitRepresentative:
    label: str
    element: Vector
    h: Vector


def algebra_key(A: SuperAlgebra) -> str:
    if A.name.startswith("D(2,1;"):
        return "D21"
    if A.name == "G(3)":
        return "G3"
    if A.name == "F(4)":
        return "F4"
    raise ValueError(f"{A.name} is not an exceptional algebra")


def build_exceptional(key: str, field: ScalarField = QQ_ALPHA_FIELD) -> SuperAlgebra:
    if key == "D21":
        return build_D21(field)
    if key == "G3":
        return build_G3()
    if key == "F4":
        return build_F4()
    raise ValueError(f"unknown exceptional algebra '{key}'")


def _orient(match: re.Match) -> str:
    a, b = match.group(1), match.group(2)
    if a in SO7_ORDER and b in SO7_ORDER and SO7_ORDER.index(a) > SO7_ORDER.index(b):
        a, b = b, a
    return r_name(a, b)


def normalize_label(key: str, label: str) -> str:
    "Canonical spelling of an orbit label; R(b,a) is accepted for R(a,b)."
    known = ORBIT_LABELS[key]
    canonical = _R_TERM.sub(_orient, re.sub(r"\s+", "", label))
    if canonical not in known:
        raise UnknownOrbitError(label, list(known))
    return canonical


def label_element(A: SuperAlgebra, label: str) -> Vector:
    "Sum of the basis elements named in a canonical label."
    terms = {term: 1 for term in _TERM.findall(label) if term != "0"}
    return A.vector(terms)


def _representative(A: SuperAlgebra, key: str, label: str) -> OrbitRepresentative:
    element = label_element(A, label)
    cartan = [A.basis_vector(name) for name in CARTAN[key]]
    h = characteristic(A, element, cartan)
    if A.bracket(h, element) != tuple(2 * x for x in element):
        raise ConstructionError(f"[h, e] != 2e for {label} in {A.name}")
    return OrbitRepresentative(label, element, h)


def orbit_reps(A: SuperAlgebra) -> list[OrbitRepresentative]:
    "The nilpotent orbit representatives in table order, each with its neutral element."
    key = algebra_key(A)
    return [_representative(A, key, label) for label in ORBIT_LABELS[key]]


def representative(A: SuperAlgebra, label: str) -> OrbitRepresentative:
    key = algebra_key(A)
    return _representative(A, key, normalize_label(key, label))


# golden commutators

Commutator = tuple[Mapping[str, Scalar], Mapping[str, Scalar], Mapping[str, Scalar]]


def golden_commutators(A: SuperAlgebra) -> list[Commutator]:
    "Commutators that the finished algebra has to reproduce exactly."
    key = algebra_key(A)
    if key == "D21":
        s1, s2, s3 = sigma(A.field)
        return [
            (D21_X, D21_X, {"E2": 4 * s2}),
            (D21_Y, D21_Y, {"E3": 4 * s3}),
            (D21_X, D21_Y, {"E1": -2 * s1, "E2": 2 * s2, "E3": 2 * s3}),
            ({"E2": 1}, D21_Y, {"v1*v1*v1": 1}),
            ({"v1*v1*v1": 1}, {"v1*v-1*v-1": 1}, {"E1": 2 * s1}),
        ]

    if key == "G3":
        return [
            ({"y1": 1}, {"x3": 1}, {"x2": 3}),
            ({"x1": 1}, {"y1": 1}, {"h1": 1}),
            ({"h1": 1}, {"x1": 1}, {"x1": 2}),
            ({"h2": 1}, {"x1": 1}, {"x1": -1}),
            ({"h1": 1}, {"x2": 1}, {"x2": -3}),
            ({"h2": 1}, {"x2": 1}, {"x2": 2}),
            ({"x4": 1}, {"v1*e0": 1}, {"v1*e3": 2}),
            ({"x4": 1}, {"v1*e-3": 1}, {"v1*e0": -4}),
            ({"y4": 1}, {"v1*e0": 1}, {"v1*e-3": -2}),
            ({"y1": 1}, {"v1*e3": 1}, {"v1*e2": -1}),
            ({"y1": 1}, {"v1*e0": 1}, {"v1*e-1": -1}),
            (
                {"h1": 2, "h2": 3},
                {"v1*e1": 1, "v-1*e2": -1},
                {"v1*e1": 1, "v-1*e2": -1},
            ),
            ({"v1*e3": 1}, {"v1*e-3": 1}, {"E": 16}),
        ]

    return [
        ({"R(e1,e0)": 1}, {"v1*e2s": 1}, {"v1*e1e2s": -1}),
        ({"R(e2,e0)": 1}, {"v1*e1s": 1}, {"v1*e1e2s": 1}),
        ({"R(e1,e0)": 1}, {"v1*e2e3s": 1}, {"v1*e1e2e3s": 1}),
        ({"R(e1,e-2)": 1}, {"R(e2,e-1)": 1}, {"R(e1,e-1)": 1, "R(e2,e-2)": -1}),
        ({"R(e1,e3)": 1}, {"R(e2,e-3)": 1}, {"R(e1,e2)": -1}),
        # R(e-3,e0) = -R(e0,e-3)
        ({"R(e0,e-3)": -1}, {"R(e3,e0)": 1}, {"R(e3,e-3)": 2}),
        ({"v1*e1s": 1}, {"v1*e2e3s": 1}, {"E": -6}),
    ]


def check_commutators(A: SuperAlgebra) -> list[str]:
    "Golden commutators the algebra gets wrong, rendered as text."
    mismatches = []
    for left, right, expected in golden_commutators(A):
        x, y = A.vector(left), A.vector(right)
        actual = A.bracket(x, y)
        if actual != A.vector(expected):
            mismatches.append(
                f"[{A.render(x)}, {A.render(y)}] = {A.render(actual)}, "
                f"expected {A.render(A.vector(expected))}"
            )
    if mismatches:
        log.warning(f"{A.name} misses golden commutators", count=len(mismatches))
    return mismatches
