from fractions import Fraction

import pytest

from superorbit.errors import DimensionMismatchError
from superorbit.field import QQ_ALPHA_FIELD
from superorbit.linalg import (
    Echelon,
    Matrix,
    Subspace,
    coordinate_reader,
    dim,
    equal,
    intersect,
    is_subspace,
    kernel,
    member,
    rank,
    rref,
    solve,
    span,
    subspace_sum,
)

alpha = QQ_ALPHA_FIELD.alpha


def test_rank_and_rref():
    matrix = Matrix.from_rows([[1, 2], [2, 4]])
    assert rank(matrix) == 1
    assert rref(matrix).rows[0] == (1, 2)


def test_kernel():
    null = kernel(Matrix.from_rows([[1, 2], [2, 4]]))
    assert null.dim == 1
    assert null.contains((-2, 1))
    assert not null.contains((1, 1))


def test_solve():
    system = Matrix.from_rows([[1, 1], [1, -1]])
    assert solve(system, [3, 1]) == (2, 1)
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


def test_solve_sets_free_variables_to_zero():
    assert solve(Matrix.from_rows([[1, 1]]), [4]) == (4, 0)


def test_subspace_coordinates():
    S = span([(1, 1, 0), (0, 1, 1)], 3)
    assert S.dim == 2
    assert S.basis == ((1, 0, -1), (0, 1, 1))
    assert S.contains((1, 2, 1))
    assert not S.contains((1, 0, 0))
    assert S.coordinates((1, 2, 1)) == (1, 2)
    assert S.coordinates((1, 0, 0)) is None
    assert S.combine((1, 2)) == (1, 2, 1)


def test_subspace_operations():
    xy = span([(1, 0, 0), (0, 1, 0)], 3)
    yz = span([(0, 1, 0), (0, 0, 1)], 3)

    assert intersect(xy, yz).basis == ((0, 1, 0),)
    assert dim(subspace_sum(xy, yz)) == 3
    assert equal(span([(1, 1)], 2), span([(2, 2)], 2))
    assert is_subspace(span([(0, 1, 0)], 3), xy)
    assert not is_subspace(yz, xy)
    assert member((1, 1, 0), xy)
    assert intersect(xy, Subspace.zero(3)).dim == 0
    assert Subspace.full(3).dim == 3


def test_span_checks_dimensions():
    with pytest.raises(DimensionMismatchError):
        span([(1, 2)], 3)
    with pytest.raises(DimensionMismatchError):
        intersect(span([(1, 0)], 2), span([(1, 0, 0)], 3))


def test_symbolic_entries():
    S = span([(alpha, 1)], 2)
    assert S.contains((alpha**2, alpha))
    assert not S.contains((1, 1))
    assert solve(Matrix.from_rows([[alpha + 1]]), [alpha**2 - 1]) == (alpha - 1,)


def test_echelon_grows_until_saturated():
    echelon = Echelon(3)
    assert echelon.add({0: 1, 1: 1})
    assert not echelon.add({0: 2, 1: 2})
    assert echelon.add((0, 1, 0))
    assert echelon.rank == 2
    assert echelon.pivots == [0, 1]
    assert echelon.contains({0: 5})
    assert not echelon.contains({2: 1})
    assert echelon.kernel().basis == ((0, 0, 1),)
    assert echelon.subspace().basis == ((1, 0, 0), (0, 1, 0))


def test_echelon_widens_to_rational_functions():
    echelon = Echelon(2)
    echelon.add({0: Fraction(1, 2), 1: 1})
    echelon.add({1: alpha})
    assert echelon.rank == 2
    assert echelon.contains({0: alpha, 1: 3})


def test_coordinate_reader():
    reader = coordinate_reader([(1, 1), (1, -1)])
    assert reader.coordinates((3, 1)) == (2, 1)

    reader = coordinate_reader([(1, 0, 0), (0, 1, 0)])
    assert reader.coordinates((0, 0, 1)) is None


def test_coordinate_reader_rejects_dependent_vectors():
    with pytest.raises(DimensionMismatchError):
        coordinate_reader([(1, 1), (2, 2)])


def _random_rows(rng, nrows: int, ncols: int) -> list[list[int]]:
    return [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]


def test_rank_nullity(rng):
    for _ in range(30):
        ncols = rng.randint(1, 6)
        matrix = Matrix.from_rows(_random_rows(rng, rng.randint(1, 5), ncols), ncols)
        null = kernel(matrix)
        assert rank(matrix) + null.dim == ncols
        for vector in null.basis:
            assert not any(matrix.apply(vector))


def test_rank_nullity_over_the_function_field():
    matrix = Matrix.from_rows([[1, alpha, alpha**2], [alpha, alpha**2, alpha**3], [1, 0, 1]])
    assert rank(matrix) + kernel(matrix).dim == 3
    assert rank(matrix) == 2


def test_modular_law(rng):
    for _ in range(20):
        shared = _random_rows(rng, rng.randint(0, 2), 6)
        S = span(shared + _random_rows(rng, rng.randint(0, 3), 6), 6)
        T = span(shared + _random_rows(rng, rng.randint(0, 3), 6), 6)

        both = intersect(S, T)
        assert S.dim + T.dim == subspace_sum(S, T).dim + both.dim
        assert is_subspace(both, S)
        assert is_subspace(both, T)
        assert is_subspace(span(shared, 6), both)
