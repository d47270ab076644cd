"""
Exact linear algebra over the scalar fields in `superorbit.field`.

Vectors are tuples. `Subspace` always stores its reduced row echelon basis, so two subspaces are
equal exactly when their dataclass fields are equal.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import chain
from typing import Self

from .errors import DimensionMismatchError
from .field import Scalar, common_coercion

Vector = tuple[Scalar, ...]
SparseVector = dict[int, Scalar]


def _lift_rows(rows: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    coerce = common_coercion(value for row in rows for value in row)
    return [[coerce(value) for value in row] for row in rows]


def _coercer_for(vector: Iterable[Scalar], rows: Sequence[Sequence[Scalar]]):
    "Coercion shared by a vector and a homogeneous family of rows."
    sample = rows[0] if rows else ()
    return common_coercion(chain(vector, sample))


def _echelon_rows(
    rows: Sequence[Sequence[Scalar]], ncols: int
) -> tuple[list[list[Scalar]], list[int]]:
    """
    Fraction-free forward elimination followed by back substitution.

    Returns the nonzero rows of the reduced row echelon form and their pivot columns.
    """
    work = _lift_rows(rows)
    nrows = len(work)
    pivots: list[int] = []
    previous: Scalar = 1
    rank = 0

    for column in range(ncols):
        if rank == nrows:
            break

        pivot_row = next((i for i in range(rank, nrows) if work[i][column]), None)
        if pivot_row is None:
            continue

        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][column]

        for i in range(rank + 1, nrows):
            factor = work[i][column]
            work[i] = [
                (pivot * x - factor * y) / previous
                for x, y in zip(work[i], work[rank], strict=True)
            ]

        previous = pivot
        pivots.append(column)
        rank += 1

    reduced = work[:rank]
    for r in reversed(range(rank)):
        column = pivots[r]
        pivot = reduced[r][column]
        reduced[r] = [x / pivot for x in reduced[r]]
        for above in range(r):
            factor = reduced[above][column]
            if factor:
                reduced[above] = [
                    x - factor * y for x, y in zip(reduced[above], reduced[r], strict=True)
                ]

    return reduced, pivots


@dataclass(frozen=True)
class Matrix:
    rows: tuple[Vector, ...]
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatchError(self.ncols, len(row))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Scalar]], ncols: int | None = None) -> Self:
        rows = tuple(tuple(row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(rows, ncols)

    @classmethod
    def identity(cls, size: int) -> Self:
        return cls.from_rows(
            ([1 if i == j else 0 for j in range(size)] for i in range(size)), size
        )

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Self:
        return cls.from_rows(([0] * ncols for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(
            ([row[j] for row in self.rows] for j in range(self.ncols)), self.nrows
        )

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        if len(vector) != self.ncols:
            raise DimensionMismatchError(self.ncols, len(vector))
        coerce = _coercer_for(vector, self.rows)
        return tuple(
            sum(
                (coerce(a) * coerce(b) for a, b in zip(row, vector, strict=True) if a and b),
                coerce(0),
            )
            for row in self.rows
        )


def rref(matrix: Matrix) -> Matrix:
    reduced, _ = _echelon_rows(matrix.rows, matrix.ncols)
    zero_rows = [[0] * matrix.ncols] * (matrix.nrows - len(reduced))
    return Matrix.from_rows(reduced + zero_rows, matrix.ncols)


def rank(matrix: Matrix) -> int:
    return len(_echelon_rows(matrix.rows, matrix.ncols)[1])


def _kernel_from_echelon(
    reduced: Sequence[Mapping[int, Scalar]] | Sequence[Sequence[Scalar]],
    pivots: Sequence[int],
    ncols: int,
) -> list[list[Scalar]]:
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector: list[Scalar] = [0] * ncols
        vector[free] = 1
        for row, pivot in zip(reduced, pivots, strict=True):
            entry = row.get(free, 0) if isinstance(row, Mapping) else row[free]
            if entry:
                vector[pivot] = -entry
        vectors.append(vector)
    return vectors


def kernel(matrix: Matrix) -> "Subspace":
    reduced, pivots = _echelon_rows(matrix.rows, matrix.ncols)
    return span(_kernel_from_echelon(reduced, pivots, matrix.ncols), matrix.ncols)


def solve(matrix: Matrix, rhs: Sequence[Scalar]) -> Vector | None:
    """
    One solution of `matrix @ x = rhs` with every free variable set to zero, or None.
    """
    if len(rhs) != matrix.nrows:
        raise DimensionMismatchError(matrix.nrows, len(rhs))

    augmented = [
        list(row) + [value] for row, value in zip(matrix.rows, rhs, strict=True)
    ]
    reduced, pivots = _echelon_rows(augmented, matrix.ncols + 1)

    if pivots and pivots[-1] == matrix.ncols:
        return None

    coerce = common_coercion(value for row in reduced for value in row)
    solution = [coerce(0)] * matrix.ncols
    for row, pivot in zip(reduced, pivots, strict=True):
        solution[pivot] = row[matrix.ncols]
    return tuple(solution)


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def zero(cls, ambient_dim: int) -> Self:
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> Self:
        return span(Matrix.identity(ambient_dim).rows, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def reduce(self, vector: Sequence[Scalar]) -> list[Scalar]:
        "Remainder of `vector` after clearing every pivot column."
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(self.ambient_dim, len(vector))

        coerce = _coercer_for(vector, self.basis)
        remainder = [coerce(x) for x in vector]
        for row, pivot in zip(self.basis, self.pivots, strict=True):
            coefficient = remainder[pivot]
            if coefficient:
                remainder = [
                    x - coefficient * coerce(y) if y else x
                    for x, y in zip(remainder, row, strict=True)
                ]
        return remainder

    def contains(self, vector: Sequence[Scalar]) -> bool:
        return not any(self.reduce(vector))

    def coordinates(self, vector: Sequence[Scalar]) -> Vector | None:
        "Coefficients of `vector` in the echelon basis, None when it lies outside."
        if not self.contains(vector):
            return None
        return tuple(vector[pivot] for pivot in self.pivots)

    def combine(self, coefficients: Sequence[Scalar]) -> Vector:
        if len(coefficients) != self.dim:
            raise DimensionMismatchError(self.dim, len(coefficients))

        coerce = _coercer_for(coefficients, self.basis)
        result: list[Scalar] = [coerce(0)] * self.ambient_dim
        for coefficient, row in zip(coefficients, self.basis, strict=True):
            if coefficient:
                coefficient = coerce(coefficient)
                result = [
                    x + coefficient * coerce(y) if y else x
                    for x, y in zip(result, row, strict=True)
                ]
        return tuple(result)


def _check_ambient(*spaces: Subspace):
    first = spaces[0].ambient_dim
    for space in spaces[1:]:
        if space.ambient_dim != first:
            raise DimensionMismatchError(first, space.ambient_dim)


def span(vectors: Iterable[Sequence[Scalar]], ambient_dim: int) -> Subspace:
    rows = [tuple(vector) for vector in vectors]
    for row in rows:
        if len(row) != ambient_dim:
            raise DimensionMismatchError(ambient_dim, len(row))

    reduced, pivots = _echelon_rows(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(row) for row in reduced), tuple(pivots))


def member(vector: Sequence[Scalar], space: Subspace) -> bool:
    return space.contains(vector)


def subspace_sum(*spaces: Subspace) -> Subspace:
    _check_ambient(*spaces)
    return span(
        (row for space in spaces for row in space.basis), spaces[0].ambient_dim
    )


def intersect(first: Subspace, second: Subspace) -> Subspace:
    """
    S ∩ T from the kernel of [S^T | -T^T]: a·S = b·T pairs give the common vectors.
    """
    _check_ambient(first, second)
    if not first.dim or not second.dim:
        return Subspace.zero(first.ambient_dim)

    columns = [*first.basis, *(tuple(-x for x in row) for row in second.basis)]
    system = Matrix.from_rows(
        ([column[k] for column in columns] for k in range(first.ambient_dim)),
        len(columns),
    )
    solutions = kernel(system)
    return span(
        (first.combine(solution[: first.dim]) for solution in solutions.basis),
        first.ambient_dim,
    )


def equal(first: Subspace, second: Subspace) -> bool:
    _check_ambient(first, second)
    return first.pivots == second.pivots and first.basis == second.basis


def dim(space: Subspace) -> int:
    return space.dim


def is_subspace(inner: Subspace, outer: Subspace) -> bool:
    _check_ambient(inner, outer)
    return all(outer.contains(row) for row in inner.basis)


def to_sparse(vector: Sequence[Scalar]) -> SparseVector:
    return {index: value for index, value in enumerate(vector) if value}


def to_dense(vector: Mapping[int, Scalar], ambient_dim: int, zero: Scalar = 0) -> Vector:
    dense = [zero] * ambient_dim
    for index, value in vector.items():
        dense[index] = value
    return tuple(dense)


class Echelon:
    """
    Incrementally grown span with sparse, fully reduced rows.

    `add` reports whether the span grew, so callers can stop as soon as it saturates.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, SparseVector] = {}
        self._coerce = common_coercion(())
        self._symbolic = False

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def row(self, pivot: int) -> SparseVector:
        return dict(self._rows[pivot])

    def reduce(self, vector: Mapping[int, Scalar] | Sequence[Scalar]) -> SparseVector:
        remainder = dict(vector) if isinstance(vector, Mapping) else to_sparse(vector)
        self._widen(remainder.values())
        remainder = {k: self._coerce(v) for k, v in remainder.items() if v}

        for pivot in [column for column in remainder if column in self._rows]:
            coefficient = remainder.get(pivot)
            if not coefficient:
                continue
            for column, value in self._rows[pivot].items():
                updated = remainder.get(column, 0) - coefficient * value
                if updated:
                    remainder[column] = updated
                else:
                    remainder.pop(column, None)
        return remainder

    def _widen(self, values: Iterable[Scalar]):
        "Move every stored row into QQ(a) once the first rational function arrives."
        if self._symbolic:
            return
        coerce = common_coercion(values)
        if coerce is self._coerce:
            return
        self._coerce = coerce
        self._symbolic = True
        self._rows = {
            pivot: {column: coerce(value) for column, value in row.items()}
            for pivot, row in self._rows.items()
        }

    def contains(self, vector: Mapping[int, Scalar] | Sequence[Scalar]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Mapping[int, Scalar] | Sequence[Scalar]) -> bool:
        remainder = self.reduce(vector)
        if not remainder:
            return False

        pivot = min(remainder)
        scale = remainder[pivot]
        row = {column: value / scale for column, value in remainder.items()}

        for other in self._rows.values():
            coefficient = other.get(pivot)
            if not coefficient:
                continue
            for column, value in row.items():
                updated = other.get(column, 0) - coefficient * value
                if updated:
                    other[column] = updated
                else:
                    other.pop(column, None)

        self._rows[pivot] = row
        return True

    def subspace(self) -> Subspace:
        pivots = sorted(self._rows)
        basis = [self._rows[pivot] for pivot in pivots]
        coerce = common_coercion(value for row in basis for value in row.values())
        zero = coerce(0)
        return Subspace(
            self.ambient_dim,
            tuple(to_dense(row, self.ambient_dim, zero) for row in basis),
            tuple(pivots),
        )

    def kernel(self) -> Subspace:
        "Null space of the accumulated rows, read as linear equations."
        pivots = sorted(self._rows)
        vectors = _kernel_from_echelon(
            [self._rows[pivot] for pivot in pivots], pivots, self.ambient_dim
        )
        return span(vectors, self.ambient_dim)


class CoordinateReader:
    """
    Coordinates with respect to a fixed linearly independent family of vectors.
    """

    def __init__(self, vectors: Sequence[Sequence[Scalar]]):
        vectors = [tuple(vector) for vector in vectors]
        self.size = len(vectors)
        self.ambient_dim = len(vectors[0]) if vectors else 0

        augmented = [
            list(vector) + [1 if i == j else 0 for j in range(self.size)]
            for i, vector in enumerate(vectors)
        ]
        reduced, pivots = _echelon_rows(augmented, self.ambient_dim + self.size)

        if any(pivot >= self.ambient_dim for pivot in pivots):
            raise DimensionMismatchError(self.size, sum(p < self.ambient_dim for p in pivots))

        self._rows = [row[: self.ambient_dim] for row in reduced]
        self._transforms = [row[self.ambient_dim :] for row in reduced]
        self._pivots = pivots

    def coordinates(self, vector: Sequence[Scalar]) -> Vector | None:
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(self.ambient_dim, len(vector))

        coerce = _coercer_for(vector, self._rows)
        remainder = [coerce(x) for x in vector]
        result: list[Scalar] = [coerce(0)] * self.size
        for row, transform, pivot in zip(
            self._rows, self._transforms, self._pivots, strict=True
        ):
            coefficient = remainder[pivot]
            if not coefficient:
                continue
            remainder = [
                x - coefficient * coerce(y) for x, y in zip(remainder, row, strict=True)
            ]
            result = [
                x + coefficient * coerce(t) for x, t in zip(result, transform, strict=True)
            ]

        if any(remainder):
            return None
        return tuple(result)


def coordinate_reader(vectors: Sequence[Sequence[Scalar]]) -> CoordinateReader:
    return CoordinateReader(vectors)
