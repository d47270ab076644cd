"""
Lie superalgebras presented by a parity-tagged basis and structure constants.

Structure constants are stored sparse: `structure[(i, j)]` maps k to the coefficient of b_k in
[b_i, b_j], for every ordered pair with a nonzero bracket. Vectors handed in and out are dense
tuples of length `dim`.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from .errors import (
    ConstructionError,
    DimensionMismatchError,
    GradingError,
    NotAnIdealError,
    NotClosedError,
)
from .field import QQ_FIELD, Scalar, ScalarField, as_integer, field_from_name
from .linalg import (
    CoordinateReader,
    Echelon,
    Matrix,
    SparseVector,
    Subspace,
    Vector,
    kernel,
    solve,
    span,
    subspace_sum,
    to_dense,
    to_sparse,
)
from .log import log

Structure = dict[tuple[int, int], SparseVector]
SparseMatrix = dict[tuple[int, int], Scalar]


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _add_scaled(target: SparseVector, source: Mapping[int, Scalar], scale: Scalar):
    for k, value in source.items():
        updated = target.get(k, 0) + scale * value
        if updated:
            target[k] = updated
        else:
            target.pop(k, None)


@dataclass(frozen=True, eq=False)
class SuperAlgebra:
    name: str
    basis_names: tuple[str, ...]
    parities: tuple[int, ...]
    structure: Structure
    field: ScalarField = QQ_FIELD

    def __post_init__(self):
        if len(self.parities) != len(self.basis_names):
            raise DimensionMismatchError(len(self.basis_names), len(self.parities))

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.basis_names)}

    def index(self, name: str) -> int:
        return self._index[name]

    @property
    def zero(self) -> Vector:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.index(i)
        vector = list(self.zero)
        vector[i] = self.field.one
        return tuple(vector)

    def vector(self, terms: Mapping[str, Scalar]) -> Vector:
        "Dense vector from {basis name: coefficient}."
        result = list(self.zero)
        for name, coefficient in terms.items():
            result[self.index(name)] += self.field.coerce(coefficient)
        return tuple(result)

    def dense(self, vector: Mapping[int, Scalar]) -> Vector:
        return to_dense(vector, self.dim, self.field.zero)

    def check_vector(self, vector: Sequence[Scalar]):
        if len(vector) != self.dim:
            raise DimensionMismatchError(self.dim, len(vector))

    def parity_of(self, vector: Sequence[Scalar] | Mapping[int, Scalar]) -> int | None:
        "Parity of a homogeneous vector, None for a mixed one. The zero vector counts as even."
        support = vector.keys() if isinstance(vector, Mapping) else to_sparse(vector).keys()
        parities = {self.parities[k] for k in support}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def render(self, vector: Sequence[Scalar]) -> str:
        terms = []
        for k, value in to_sparse(vector).items():
            if value == 1:
                terms.append(f"+{self.basis_names[k]}")
            elif value == -1:
                terms.append(f"-{self.basis_names[k]}")
            else:
                rendered = self.field.render(value)
                if not rendered.startswith("-"):
                    rendered = f"+{rendered}"
                terms.append(f"{rendered}*{self.basis_names[k]}")

        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text.startswith("+") else text

    def sparse_bracket(
        self, x: Mapping[int, Scalar], y: Mapping[int, Scalar]
    ) -> SparseVector:
        result: SparseVector = {}
        for i, xi in x.items():
            for j, yj in y.items():
                entry = self.structure.get((i, j))
                if entry:
                    _add_scaled(result, entry, xi * yj)
        return result

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        self.check_vector(x)
        self.check_vector(y)
        coerce = self.field.coerce
        return self.dense(
            self.sparse_bracket(
                {k: coerce(v) for k, v in to_sparse(x).items()},
                {k: coerce(v) for k, v in to_sparse(y).items()},
            )
        )


def bracket(A: SuperAlgebra, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return A.bracket(x, y)


def _check_parity(
    names: Sequence[str], parities: Sequence[int], i: int, j: int, value: Mapping[int, Scalar]
):
    expected = (parities[i] + parities[j]) % 2
    for k in value:
        if parities[k] != expected:
            raise ConstructionError(
                f"[{names[i]}, {names[j]}] has a component along {names[k]} of the wrong parity"
            )


def from_brackets(
    name: str,
    basis_names: Sequence[str],
    parities: Sequence[int],
    brackets: Mapping[tuple[int | str, int | str], Mapping[int | str, Scalar]],
    field: ScalarField = QQ_FIELD,
) -> SuperAlgebra:
    """
    Build an algebra from the brackets of basis pairs, completing the rest by super skew-symmetry.

    Pairs that are not listed bracket to zero. Listing both orders is allowed when they agree.
    """
    names = tuple(basis_names)
    index = {basis_name: i for i, basis_name in enumerate(names)}
    parities = tuple(p % 2 for p in parities)

    def resolve(key: int | str) -> int:
        return index[key] if isinstance(key, str) else key

    structure: Structure = {}
    for (left, right), value in brackets.items():
        i, j = resolve(left), resolve(right)
        coerced = {resolve(k): field.coerce(c) for k, c in value.items()}
        entry = {k: c for k, c in coerced.items() if c}
        _check_parity(names, parities, i, j, entry)

        sign = -_sign(parities[i] * parities[j])
        mirrored = {k: sign * c for k, c in entry.items()}

        if i == j and entry != mirrored:
            raise ConstructionError(f"[{names[i]}, {names[i]}] must vanish for an even element")

        for key, candidate in (((i, j), entry), ((j, i), mirrored)):
            existing = structure.get(key)
            if existing is not None and existing != candidate:
                raise ConstructionError(
                    f"inconsistent brackets given for {names[key[0]]} and {names[key[1]]}"
                )
            if candidate:
                structure[key] = candidate

    log.debug(f"built {name} from brackets", dim=len(names))
    return SuperAlgebra(name, names, parities, structure, field)


def matrix_product(left: SparseMatrix, right: SparseMatrix) -> SparseMatrix:
    by_row: dict[int, list[tuple[int, Scalar]]] = {}
    for (r, c), value in right.items():
        by_row.setdefault(r, []).append((c, value))

    result: SparseMatrix = {}
    for (r, k), a in left.items():
        for c, b in by_row.get(k, ()):
            updated = result.get((r, c), 0) + a * b
            if updated:
                result[(r, c)] = updated
            else:
                result.pop((r, c), None)
    return result


def supercommutator(
    x: SparseMatrix, y: SparseMatrix, parity_x: int, parity_y: int
) -> SparseMatrix:
    result = dict(matrix_product(x, y))
    sign = _sign(parity_x * parity_y)
    for key, value in matrix_product(y, x).items():
        updated = result.get(key, 0) - sign * value
        if updated:
            result[key] = updated
        else:
            result.pop(key, None)
    return result


def from_matrices(
    name: str,
    basis_names: Sequence[str],
    parities: Sequence[int],
    matrices: Sequence[SparseMatrix],
    size: int,
    field: ScalarField = QQ_FIELD,
) -> SuperAlgebra:
    """
    The algebra spanned by linearly independent `size`×`size` supermatrices under the
    supercommutator. Fails when the span is not closed.
    """
    if not (len(basis_names) == len(parities) == len(matrices)):
        raise DimensionMismatchError(len(basis_names), len(matrices))

    def flatten(matrix: SparseMatrix) -> Vector:
        return to_dense({r * size + c: v for (r, c), v in matrix.items()}, size * size)

    reader = CoordinateReader([flatten(matrix) for matrix in matrices])
    structure: Structure = {}
    for i, x in enumerate(matrices):
        for j in range(i, len(matrices)):
            product = supercommutator(x, matrices[j], parities[i], parities[j])
            if not product:
                continue
            coordinates = reader.coordinates(flatten(product))
            if coordinates is None:
                raise NotClosedError((i, j))

            entry = {k: field.coerce(c) for k, c in enumerate(coordinates) if c}
            if entry:
                structure[(i, j)] = entry
                if i != j:
                    sign = -_sign(parities[i] * parities[j])
                    structure[(j, i)] = {k: sign * c for k, c in entry.items()}

    log.debug(f"built {name} from matrices", dim=len(matrices), size=size)
    return SuperAlgebra(name, tuple(basis_names), tuple(parities), structure, field)


def direct_sum(name: str, *algebras: SuperAlgebra) -> SuperAlgebra:
    field = next((A.field for A in algebras if A.field.symbolic), algebras[0].field)
    names: list[str] = []
    parities: list[int] = []
    structure: Structure = {}

    offset = 0
    for A in algebras:
        for (i, j), value in A.structure.items():
            structure[(i + offset, j + offset)] = {
                k + offset: field.coerce(c) for k, c in value.items()
            }
        names.extend(A.basis_names)
        parities.extend(A.parities)
        offset += A.dim

    if len(set(names)) != len(names):
        raise ConstructionError(f"summands of {name} share basis names")

    return SuperAlgebra(name, tuple(names), tuple(parities), structure, field)


def ad_matrix(A: SuperAlgebra, x: Sequence[Scalar]) -> Matrix:
    "Matrix of ad x; column j holds the coordinates of [x, b_j]."
    A.check_vector(x)
    rows = [list(A.zero) for _ in range(A.dim)]
    sparse_x = {k: A.field.coerce(v) for k, v in to_sparse(x).items()}
    for j in range(A.dim):
        for k, value in A.sparse_bracket(sparse_x, {j: A.field.one}).items():
            rows[k][j] = value
    return Matrix.from_rows(rows, A.dim)


def _ad_rows(A: SuperAlgebra, x: Sequence[Scalar]) -> list[SparseVector]:
    sparse_x = {k: A.field.coerce(v) for k, v in to_sparse(x).items()}
    rows: list[SparseVector] = [{} for _ in range(A.dim)]
    for j in range(A.dim):
        for k, value in A.sparse_bracket(sparse_x, {j: A.field.one}).items():
            rows[k][j] = value
    return rows


def is_ad_nilpotent(A: SuperAlgebra, x: Sequence[Scalar]) -> bool:
    A.check_vector(x)
    sparse_x = {k: A.field.coerce(v) for k, v in to_sparse(x).items()}
    for j in range(A.dim):
        image: SparseVector = {j: A.field.one}
        for _ in range(A.dim):
            image = A.sparse_bracket(sparse_x, image)
            if not image:
                break
        else:
            return False
    return True


def check_super_jacobi(A: SuperAlgebra) -> list[tuple[str, str, str]]:
    """
    Basis triples violating (-1)^{xz}[x,[y,z]] + (-1)^{yx}[y,[z,x]] + (-1)^{zy}[z,[x,y]] = 0.

    Super skew-symmetry makes the expression alternate under permutations, so sorted triples
    cover everything.
    """
    violations = []
    p = A.parities
    one = A.field.one

    for i in range(A.dim):
        for j in range(i, A.dim):
            for k in range(j, A.dim):
                total: SparseVector = {}
                for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = A.structure.get((y, z))
                    if not inner:
                        continue
                    _add_scaled(
                        total, A.sparse_bracket({x: one}, inner), _sign(p[x] * p[z])
                    )
                if total:
                    violations.append(
                        (A.basis_names[i], A.basis_names[j], A.basis_names[k])
                    )

    if violations:
        log.debug(f"{A.name} violates super Jacobi", count=len(violations))
    return violations


def centralizer(A: SuperAlgebra, e: Sequence[Scalar]) -> Subspace:
    "g^e as the kernel of ad e."
    echelon = Echelon(A.dim)
    for row in _ad_rows(A, e):
        if row:
            echelon.add(row)
    return echelon.kernel()


def centralizer_in(A: SuperAlgebra, S: Subspace, x: Sequence[Scalar]) -> Subspace:
    "{s in S : [x, s] = 0}."
    images = [A.bracket(x, s) for s in S.basis]
    echelon = Echelon(S.dim)
    for k in range(A.dim):
        row = {t: image[k] for t, image in enumerate(images) if image[k]}
        if row:
            echelon.add(row)
    return span((S.combine(c) for c in echelon.kernel().basis), A.dim)


def _is_homogeneous(A: SuperAlgebra, vectors: Iterable[Sequence[Scalar]]) -> bool:
    return all(A.parity_of(vector) is not None for vector in vectors)


def _pairs(count: int, symmetric: bool) -> Iterable[tuple[int, int]]:
    for u in range(count):
        for v in range(u if symmetric else 0, count):
            yield u, v


def bracket_span(
    A: SuperAlgebra, S: Subspace, T: Subspace, within: Subspace | None = None
) -> Subspace:
    """
    span{[s, t] : s in S, t in T}.

    `within` is a known upper bound for the result; the scan stops once it is reached.
    """
    if S.ambient_dim != A.dim:
        raise DimensionMismatchError(A.dim, S.ambient_dim)
    if T.ambient_dim != A.dim:
        raise DimensionMismatchError(A.dim, T.ambient_dim)

    ceiling = within.dim if within is not None else A.dim
    echelon = Echelon(A.dim)
    if ceiling == 0:
        return echelon.subspace()

    left = [to_sparse(s) for s in S.basis]
    same = S == T
    right = left if same else [to_sparse(t) for t in T.basis]
    symmetric = same and _is_homogeneous(A, S.basis)

    if same:
        pairs = _pairs(len(left), symmetric)
    else:
        pairs = ((u, v) for u in range(len(left)) for v in range(len(right)))

    for u, v in pairs:
        product = A.sparse_bracket(left[u], right[v])
        if product and echelon.add(product) and echelon.rank == ceiling:
            break

    return echelon.subspace()


def derived_subspace(A: SuperAlgebra, S: Subspace, within: Subspace | None = None) -> Subspace:
    "[S, S]; pass `within=S` when S is known to be closed to stop at saturation."
    return bracket_span(A, S, S, within)


def generated_subalgebra(A: SuperAlgebra, S: Subspace) -> Subspace:
    "The least bracket-closed subspace containing S."
    echelon = Echelon(A.dim)
    generators: list[SparseVector] = []
    for s in S.basis:
        if echelon.add(s):
            generators.append(to_sparse(s))

    symmetric = _is_homogeneous(A, S.basis)
    done = 0
    while done < len(generators):
        newest = generators[done]
        for other in generators[: done + 1]:
            products = [A.sparse_bracket(other, newest)]
            if not symmetric:
                products.append(A.sparse_bracket(newest, other))
            for product in products:
                if product and echelon.add(product):
                    generators.append(product)
        done += 1

    return echelon.subspace()


def is_closed(A: SuperAlgebra, S: Subspace) -> bool:
    try:
        _closure_witness(A, S)
    except NotClosedError:
        return False
    return True


def _closure_witness(A: SuperAlgebra, S: Subspace) -> dict[tuple[int, int], Vector]:
    "All brackets of basis pairs of S, raising NotClosedError on the first one leaving S."
    products = {}
    for u in range(S.dim):
        for v in range(S.dim):
            product = A.bracket(S.basis[u], S.basis[v])
            if not S.contains(product):
                raise NotClosedError((u, v))
            products[(u, v)] = product
    return products


def center_of(A: SuperAlgebra, S: Subspace) -> Subspace:
    """
    Elements of S that commute with all of S.

    Solves sum_t c_t [s_t, s_u] = 0 for every u as one joint kernel.
    """
    products = _closure_witness(A, S)
    echelon = Echelon(S.dim)
    for u in range(S.dim):
        for k in range(A.dim):
            row = {t: products[(t, u)][k] for t in range(S.dim) if products[(t, u)][k]}
            if row:
                echelon.add(row)
                if echelon.rank == S.dim:
                    return Subspace.zero(A.dim)

    return span((S.combine(c) for c in echelon.kernel().basis), A.dim)


@dataclass(frozen=True)
class GradedDecomposition:
    pieces: dict[int, Subspace]
    ambient_dim: int

    def dims(self) -> dict[int, int]:
        return {j: piece.dim for j, piece in sorted(self.pieces.items())}

    def piece(self, j: int) -> Subspace:
        return self.pieces.get(j, Subspace.zero(self.ambient_dim))

    def at_least(self, j: int) -> Subspace:
        selected = [piece for grade, piece in self.pieces.items() if grade >= j]
        return subspace_sum(Subspace.zero(self.ambient_dim), *selected)

    def positive(self) -> Subspace:
        return self.at_least(1)

    def total(self) -> Subspace:
        return subspace_sum(Subspace.zero(self.ambient_dim), *self.pieces.values())


def _candidate_grades(A: SuperAlgebra, h: Sequence[Scalar], matrix: Matrix) -> set[int]:
    sparse_h = {k: A.field.coerce(v) for k, v in to_sparse(h).items()}
    grades = {0}
    for k in range(A.dim):
        diagonal = A.sparse_bracket(sparse_h, {k: A.field.one}).get(k, 0)
        if (grade := as_integer(diagonal)) is not None:
            grades.add(grade)
    for t in range(matrix.nrows):
        if (grade := as_integer(matrix.rows[t][t])) is not None:
            grades.add(grade)
    return grades


def grade_decompose(
    A: SuperAlgebra, S: Subspace, h: Sequence[Scalar]
) -> GradedDecomposition:
    """
    Split S into ad h eigenspaces. Only integer eigenvalues are looked for; the pieces must add up
    to S or the grading is rejected.
    """
    columns = []
    for s in S.basis:
        coordinates = S.coordinates(A.bracket(h, s))
        if coordinates is None:
            raise GradingError("subspace is not stable under ad h", witness=s)
        columns.append(coordinates)

    matrix = Matrix.from_rows(
        ([column[r] for column in columns] for r in range(S.dim)), S.dim
    )

    pieces = {}
    for grade in sorted(_candidate_grades(A, h, matrix)):
        shifted = Matrix.from_rows(
            (
                [entry - grade if r == c else entry for c, entry in enumerate(row)]
                for r, row in enumerate(matrix.rows)
            ),
            S.dim,
        )
        eigenspace = kernel(shifted)
        if eigenspace.dim:
            pieces[grade] = span((S.combine(c) for c in eigenspace.basis), A.dim)

    found = sum(piece.dim for piece in pieces.values())
    if found != S.dim:
        raise GradingError(
            f"ad h has non-integer or non-semisimple spectrum: {found} of {S.dim} dimensions graded"
        )

    return GradedDecomposition(pieces, A.dim)


def _combination_name(A: SuperAlgebra, vector: Sequence[Scalar]) -> str:
    return A.render(vector).replace("*", "")


@dataclass(frozen=True)
class Embedding:
    "A subalgebra together with its inclusion into the ambient algebra."

    algebra: SuperAlgebra
    subspace: Subspace

    def lift(self, vector: Sequence[Scalar]) -> Vector:
        return self.subspace.combine(vector)

    def restrict(self, vector: Sequence[Scalar]) -> Vector | None:
        return self.subspace.coordinates(vector)


def subalgebra(
    A: SuperAlgebra,
    S: Subspace,
    name: str,
    basis_names: Sequence[str] | None = None,
) -> Embedding:
    """
    The subalgebra on the echelon basis of S. Coordinates are the entries at the pivot columns.
    """
    if not _is_homogeneous(A, S.basis):
        raise ConstructionError(f"{name}: subspace is not spanned by homogeneous vectors")

    names = tuple(basis_names or (_combination_name(A, s) for s in S.basis))
    parities = tuple(A.parity_of(s) or 0 for s in S.basis)
    sparse_basis = [to_sparse(s) for s in S.basis]

    structure: Structure = {}
    for u, v in _pairs(S.dim, symmetric=True):
        product = A.dense(A.sparse_bracket(sparse_basis[u], sparse_basis[v]))
        coordinates = S.coordinates(product)
        if coordinates is None:
            raise NotClosedError((u, v))

        entry = {k: A.field.coerce(c) for k, c in enumerate(coordinates) if c}
        if entry:
            structure[(u, v)] = entry
            if u != v:
                sign = -_sign(parities[u] * parities[v])
                structure[(v, u)] = {k: sign * c for k, c in entry.items()}

    log.debug(f"built subalgebra {name}", dim=S.dim, ambient=A.name)
    return Embedding(SuperAlgebra(name, names, parities, structure, A.field), S)


@dataclass(frozen=True)
class Projection:
    "The natural map onto A/I, reading coordinates at the non-pivot columns of I."

    ideal: Subspace
    complement: tuple[int, ...]

    def __call__(self, vector: Sequence[Scalar]) -> Vector:
        remainder = self.ideal.reduce(vector)
        return tuple(remainder[k] for k in self.complement)

    def section(self, vector: Sequence[Scalar], zero: Scalar = 0) -> Vector:
        "A preimage, supported on the complement columns."
        lifted = [zero] * self.ideal.ambient_dim
        for k, value in zip(self.complement, vector, strict=True):
            lifted[k] = value
        return tuple(lifted)


def quotient(
    A: SuperAlgebra, ideal: Subspace, name: str | None = None
) -> tuple[SuperAlgebra, Projection]:
    if ideal.ambient_dim != A.dim:
        raise DimensionMismatchError(A.dim, ideal.ambient_dim)

    sparse_ideal = [to_sparse(row) for row in ideal.basis]
    for k in range(A.dim):
        for t, row in enumerate(sparse_ideal):
            product = A.sparse_bracket({k: A.field.one}, row)
            if product and not ideal.contains(A.dense(product)):
                raise NotAnIdealError(A.basis_names[k], t)

    pivots = set(ideal.pivots)
    complement = tuple(k for k in range(A.dim) if k not in pivots)
    projection = Projection(ideal, complement)
    position = {k: a for a, k in enumerate(complement)}

    structure: Structure = {}
    for a, i in enumerate(complement):
        for b, j in enumerate(complement):
            value = A.structure.get((i, j))
            if not value:
                continue
            remainder = to_sparse(ideal.reduce(A.dense(value)))
            entry = {position[k]: A.field.coerce(c) for k, c in remainder.items()}
            if entry:
                structure[(a, b)] = entry

    quotient_name = name or f"{A.name}/I"
    log.debug(f"built quotient {quotient_name}", dim=len(complement))
    return (
        SuperAlgebra(
            quotient_name,
            tuple(A.basis_names[k] for k in complement),
            tuple(A.parities[k] for k in complement),
            structure,
            A.field,
        ),
        projection,
    )


def complete_triple(A: SuperAlgebra, e: Sequence[Scalar], h: Sequence[Scalar]) -> Vector:
    "The f with [e, f] = h and [h, f] = -2f."
    ad_e = ad_matrix(A, e)
    ad_h = ad_matrix(A, h)
    shifted = [
        [entry + 2 if r == c else entry for c, entry in enumerate(row)]
        for r, row in enumerate(ad_h.rows)
    ]
    system = Matrix.from_rows([*ad_e.rows, *shifted], A.dim)
    f = solve(system, [*h, *A.zero])
    if f is None:
        raise GradingError("e and h do not extend to an sl(2)-triple", witness=tuple(h))
    return tuple(A.field.coerce(x) for x in f)


def characteristic(
    A: SuperAlgebra, e: Sequence[Scalar], cartan: Sequence[Sequence[Scalar]]
) -> Vector:
    """
    The neutral element h of e inside span(cartan): h lies in the image of ad e and [h, e] = 2e.
    """
    if not any(e):
        return A.zero

    ad_e = ad_matrix(A, e)
    cartan_images = [A.bracket(H, e) for H in cartan]
    width = len(cartan) + A.dim

    rows = []
    # sum_t c_t H_t - [e, f] = 0
    for k in range(A.dim):
        rows.append([H[k] for H in cartan] + [-x for x in ad_e.rows[k]])
    # sum_t c_t [H_t, e] = 2e
    for k in range(A.dim):
        rows.append([image[k] for image in cartan_images] + [0] * A.dim)

    solution = solve(Matrix.from_rows(rows, width), [*A.zero, *(2 * x for x in e)])
    if solution is None:
        raise GradingError("no neutral element in the given Cartan span", witness=tuple(e))

    h = list(A.zero)
    for coefficient, H in zip(solution[: len(cartan)], cartan, strict=True):
        if coefficient:
            h = [
                x + A.field.coerce(coefficient) * A.field.coerce(y)
                for x, y in zip(h, H, strict=True)
            ]
    return tuple(h)


def to_json(A: SuperAlgebra) -> dict[str, Any]:
    brackets = []
    for (i, j), value in sorted(A.structure.items()):
        if i > j:
            continue
        brackets.append(
            [i, j, [[k, A.field.render(c)] for k, c in sorted(value.items())]]
        )

    document: dict[str, Any] = {
        "name": A.name,
        "field": A.field.name,
        "basis": [
            {"name": name, "parity": parity}
            for name, parity in zip(A.basis_names, A.parities, strict=True)
        ],
        "brackets": brackets,
    }
    if not A.field.symbolic:
        document["alpha"] = str(A.field.alpha)
    return document


def from_json(document: Mapping[str, Any]) -> SuperAlgebra:
    field = field_from_name(document["field"], document.get("alpha"))
    names = [entry["name"] for entry in document["basis"]]
    parities = [entry["parity"] for entry in document["basis"]]
    brackets = {
        (i, j): {k: field.parse(text) for k, text in terms}
        for i, j, terms in document["brackets"]
    }
    return from_brackets(document["name"], names, parities, brackets, field)

