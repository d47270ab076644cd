import pytest

from superorbit.errors import ConstructionError, InvalidPartitionError
from superorbit.linalg import equal
from superorbit.matrixalg import (
    SuperPartition,
    build_gl,
    build_osp,
    build_psl,
    build_sl,
    dim_formulas,
    epsilon,
    integer_partitions,
    matrix_algebra,
    nilpotent,
    osp_decomposition,
    osp_involution,
    osp_partitions,
    pyramid,
    super_partitions,
    xi_basis,
    xi_element,
)
from superorbit.superalg import centralizer, check_super_jacobi


def test_parse_and_render():
    partition = SuperPartition.parse("3,2,1|3,2,1")
    assert partition.even_parts == (3, 2, 1)
    assert partition.odd_parts == (3, 2, 1)
    assert partition.sizes == (3, 3, 2, 2, 1, 1)
    assert partition.parities == (0, 1, 0, 1, 0, 1)
    assert (partition.m, partition.n) == (6, 6)
    assert str(partition) == "3,2,1|3,2,1"

    assert SuperPartition.parse("3,1") == SuperPartition.from_parts((3, 1))
    assert str(SuperPartition.parse("|2")) == "|2"
    assert SuperPartition.parse(" 2 , 1 | 1 ") == SuperPartition.from_parts((2, 1), (1,))


@pytest.mark.parametrize("text", ["a|b", "0|1", "|", "", "2,,1|1", "1|2|3"])
def test_parse_rejects(text):
    with pytest.raises(InvalidPartitionError):
        SuperPartition.parse(text)


def test_enumeration():
    assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(super_partitions(2, 1))) == 2
    assert len(list(super_partitions(2, 2))) == 4
    assert all(partition.is_osp for partition in osp_partitions(3, 2))
    assert SuperPartition.parse("3|2") in set(osp_partitions(3, 2))


def test_osp_partitions():
    assert SuperPartition.parse("3|2").is_osp
    assert not SuperPartition.parse("3|1").is_osp
    assert not SuperPartition.parse("2|2").is_osp
    assert SuperPartition.parse("2,2|2").is_osp

    with pytest.raises(InvalidPartitionError, match="not an osp partition"):
        SuperPartition.parse("3|1").validate_osp()


def test_osp_involution():
    assert osp_involution(SuperPartition.parse("3|2,2")) == (0, 1, 2)
    assert osp_involution(SuperPartition.parse("3|1,1")) == (0, 2, 1)


def test_pyramid_of_two_two():
    P = pyramid(SuperPartition.parse("2|2"))
    assert P.size == 4
    assert P.h_diagonal() == (1, 1, -1, -1)
    assert P.column_counts() == {-1: (2, 1, 1), 0: (0, 0, 0), 1: (2, 1, 1)}
    assert P.render() == "[1] [1]\n[0] [0]"

    # e moves a box two columns to the left
    assert P.box(0, 0).col - P.box(0, 1).col == 2
    assert sorted(box.index for box in P.boxes) == [0, 1, 2, 3]
    assert {box.index for box in P.boxes if box.parity == 0} == {0, 1}


def test_family_dimensions():
    assert build_gl(2, 1).algebra.dim == 9
    assert build_sl(2, 1).algebra.dim == 8
    assert build_psl(2).algebra.dim == 14
    assert build_osp(1, 1).algebra.dim == 5
    assert build_osp(3, 1).algebra.dim == 12
    assert check_super_jacobi(build_sl(2, 1).algebra) == []


def test_family_errors():
    with pytest.raises(InvalidPartitionError):
        build_gl(0, 0)
    with pytest.raises(InvalidPartitionError):
        build_sl(1, 0)
    with pytest.raises(InvalidPartitionError):
        build_psl(1)
    with pytest.raises(InvalidPartitionError):
        matrix_algebra("psl", SuperPartition.parse("2|1"))
    with pytest.raises(ValueError, match="unknown family"):
        matrix_algebra("so", SuperPartition.parse("2|1"))


def test_lift_rejects_matrices_outside_sl():
    sl = build_sl(1, 1)
    assert not sl.contains_matrix({(0, 0): 1})
    with pytest.raises(ConstructionError):
        sl.lift_to_algebra({(0, 0): 1})


@pytest.mark.parametrize("family,text", [("gl", "2|1"), ("sl", "3|2"), ("psl", "2|2")])
def test_triples(family, text):
    data = nilpotent(family, text)
    A = data.algebra.algebra
    assert A.bracket(data.h, data.e) == tuple(2 * x for x in data.e)
    assert A.bracket(data.h, data.f) == tuple(-2 * x for x in data.f)
    assert A.bracket(data.e, data.f) == data.h


def test_centralizer_dimensions_match_formulas():
    partition = SuperPartition.parse("3|2")
    formulas = dim_formulas(partition)
    assert (formulas.gl_even, formulas.gl_odd, formulas.gl, formulas.sl) == (5, 4, 9, 8)
    assert formulas.psl is None

    data = nilpotent("sl", partition)
    assert centralizer(data.algebra.algebra, data.e).dim == 8
    assert len(xi_basis(partition)) == formulas.gl


def test_psl_formula():
    formulas = dim_formulas(SuperPartition.parse("2|2"))
    assert formulas.to_dict() == {
        "dim_gl_e": 8,
        "dim_gl_e_even": 4,
        "dim_gl_e_odd": 4,
        "dim_sl_e": 7,
        "dim_psl_e": 6,
    }

    data = nilpotent("psl", "2|2")
    assert centralizer(data.algebra.algebra, data.e).dim == 6


def test_xi_elements_commute_with_e():
    partition = SuperPartition.parse("2,1|1")
    data = nilpotent("gl", partition)
    gl = data.algebra
    for xi in xi_basis(partition):
        assert gl.algebra.bracket(data.e, gl.lift_to_algebra(xi.as_matrix())) == gl.algebra.zero

    with pytest.raises(ValueError, match="out of range"):
        xi_element(pyramid(partition), 0, 1, 5)


def test_epsilon_range():
    partition = SuperPartition.parse("3|2")
    assert epsilon(0, 0, 0, partition) in (1, -1)
    with pytest.raises(ValueError):
        epsilon(0, 1, 2, partition)


def test_osp_decomposition_spans_centralizer():
    data = nilpotent("osp", "3|2")
    decomposition = osp_decomposition(data)
    assert decomposition.n2_minus.dim > 0
    assert equal(decomposition.total(), centralizer(data.algebra.algebra, data.e))
