import pytest

from superorbit.errors import ConstructionError, GradingError, NotAnIdealError, NotClosedError
from superorbit.linalg import Subspace, equal, is_subspace, span
from superorbit.matrixalg import build_gl, build_psl, build_sl, nilpotent
from superorbit.superalg import (
    SuperAlgebra,
    bracket_span,
    center_of,
    centralizer,
    centralizer_in,
    characteristic,
    check_super_jacobi,
    complete_triple,
    derived_subspace,
    direct_sum,
    from_brackets,
    from_json,
    generated_subalgebra,
    grade_decompose,
    is_ad_nilpotent,
    is_closed,
    quotient,
    subalgebra,
    to_json,
)


@pytest.fixture
def sl2():
    return from_brackets(
        "sl2",
        ("e", "h", "f"),
        (0, 0, 0),
        {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}},
    )


@pytest.fixture
def osp12():
    "osp(1|2): sl2 plus an odd doublet u, v."
    return from_brackets(
        "osp(1|2)",
        ("e", "h", "f", "u", "v"),
        (0, 0, 0, 1, 1),
        {
            ("h", "e"): {"e": 2},
            ("h", "f"): {"f": -2},
            ("e", "f"): {"h": 1},
            ("h", "u"): {"u": 1},
            ("h", "v"): {"v": -1},
            ("e", "v"): {"u": 1},
            ("f", "u"): {"v": 1},
            ("u", "u"): {"e": 2},
            ("v", "v"): {"f": -2},
            ("u", "v"): {"h": -1},
        },
    )


def test_brackets_are_super_skew_symmetric(sl2, osp12):
    e, h, f = (sl2.basis_vector(name) for name in ("e", "h", "f"))
    assert sl2.bracket(e, f) == h
    assert sl2.bracket(f, e) == tuple(-x for x in h)

    u, v = osp12.basis_vector("u"), osp12.basis_vector("v")
    assert osp12.bracket(v, u) == osp12.bracket(u, v)


def test_jacobi(sl2, osp12):
    assert check_super_jacobi(sl2) == []
    assert check_super_jacobi(osp12) == []


def test_jacobi_reports_violations():
    broken = from_brackets(
        "broken",
        ("a", "b", "c"),
        (0, 0, 0),
        {("a", "b"): {"b": 1}, ("a", "c"): {"c": 1}, ("b", "c"): {"b": 1}},
    )
    assert check_super_jacobi(broken) == [("a", "b", "c")]


def test_even_square_must_vanish():
    with pytest.raises(ConstructionError):
        from_brackets("bad", ("x",), (0,), {("x", "x"): {"x": 1}})


def test_wrong_parity_is_rejected():
    with pytest.raises(ConstructionError):
        from_brackets("bad", ("x", "u"), (0, 1), {("x", "u"): {"x": 1}})


def test_centralizer_and_nilpotence(sl2):
    e, h = sl2.basis_vector("e"), sl2.basis_vector("h")
    g_e = centralizer(sl2, e)
    assert g_e.dim == 1
    assert g_e.contains(e)
    assert is_ad_nilpotent(sl2, e)
    assert not is_ad_nilpotent(sl2, h)

    ef = span([e, sl2.basis_vector("f")], 3)
    in_ef = centralizer_in(sl2, ef, e)
    assert in_ef.dim == 1
    assert in_ef.contains(e)


def test_triples(sl2):
    e, h, f = (sl2.basis_vector(name) for name in ("e", "h", "f"))
    assert complete_triple(sl2, e, h) == f
    assert characteristic(sl2, e, [h]) == h
    assert characteristic(sl2, sl2.zero, [h]) == sl2.zero

    with pytest.raises(GradingError):
        complete_triple(sl2, e, tuple(3 * x for x in h))


def test_odd_characteristic(osp12):
    u, h = osp12.basis_vector("u"), osp12.basis_vector("h")
    e = osp12.basis_vector("e")
    assert characteristic(osp12, e, [h]) == h
    assert osp12.bracket(u, u) == tuple(2 * x for x in e)


def test_grading(sl2, osp12):
    h = sl2.basis_vector("h")
    assert grade_decompose(sl2, Subspace.full(3), h).dims() == {-2: 1, 0: 1, 2: 1}

    graded = grade_decompose(osp12, Subspace.full(5), osp12.basis_vector("h"))
    assert graded.dims() == {-2: 1, -1: 1, 0: 1, 1: 1, 2: 1}
    assert graded.positive().dim == 2
    assert graded.total().dim == 5


def test_grading_needs_a_stable_subspace(sl2):
    with pytest.raises(GradingError):
        grade_decompose(sl2, span([sl2.basis_vector("h")], 3), sl2.basis_vector("e"))


def test_derived_and_centre(sl2):
    full = Subspace.full(3)
    assert derived_subspace(sl2, full, within=full).dim == 3
    assert center_of(sl2, full).dim == 0

    gl11 = build_gl(1, 1).algebra
    assert center_of(gl11, Subspace.full(gl11.dim)).dim == 1

    sl11 = build_sl(1, 1).algebra
    assert sl11.dim == 3
    assert derived_subspace(sl11, Subspace.full(3)).dim == 1


def test_closure(sl2):
    e, f = sl2.basis_vector("e"), sl2.basis_vector("f")
    ef = span([e, f], 3)
    assert not is_closed(sl2, ef)
    assert generated_subalgebra(sl2, ef).dim == 3
    with pytest.raises(NotClosedError):
        center_of(sl2, ef)

    products = bracket_span(sl2, span([e], 3), span([f], 3))
    assert products.dim == 1
    assert products.contains(sl2.basis_vector("h"))


def test_subalgebra_and_quotient(sl2):
    borel = subalgebra(sl2, span([sl2.basis_vector("h"), sl2.basis_vector("e")], 3), "b")
    assert borel.algebra.dim == 2
    assert check_super_jacobi(borel.algebra) == []

    with pytest.raises(NotClosedError):
        subalgebra(sl2, span([sl2.basis_vector("e"), sl2.basis_vector("f")], 3), "ef")

    with pytest.raises(NotAnIdealError):
        quotient(sl2, span([sl2.basis_vector("e")], 3))


def test_psl_is_a_quotient():
    psl22 = build_psl(2).algebra
    assert psl22.dim == 14
    assert center_of(psl22, Subspace.full(14)).dim == 0


def test_direct_sum(sl2, osp12):
    renamed = SuperAlgebra("copy", ("E", "H", "F", "U", "V"), osp12.parities, osp12.structure)
    total = direct_sum("sum", sl2, renamed)
    assert total.dim == 8
    assert check_super_jacobi(total) == []

    with pytest.raises(ConstructionError):
        direct_sum("clash", sl2, sl2)


def test_json_round_trip(osp12):
    restored = from_json(to_json(osp12))
    assert restored.basis_names == osp12.basis_names
    assert restored.parities == osp12.parities
    assert restored.structure == osp12.structure


def test_generated_subalgebra_is_a_closure(rng):
    A = build_sl(2, 1).algebra

    def draw(count):
        return [[rng.randint(-2, 2) for _ in range(A.dim)] for _ in range(count)]

    for _ in range(6):
        small = draw(rng.randint(1, 2))
        S = span(small, A.dim)
        T = span(small + draw(1), A.dim)

        closure = generated_subalgebra(A, S)
        assert is_subspace(S, closure)
        assert is_closed(A, closure)
        assert equal(generated_subalgebra(A, closure), closure)
        assert is_subspace(closure, generated_subalgebra(A, T))


def test_brackets_respect_the_grading():
    data = nilpotent("sl", "3|2")
    A = data.algebra.algebra

    for space in (Subspace.full(A.dim), centralizer(A, data.e)):
        grading = grade_decompose(A, space, data.h)
        for i, left in grading.pieces.items():
            for j, right in grading.pieces.items():
                assert is_subspace(bracket_span(A, left, right), grading.piece(i + j))


def test_sl_three_three_modulo_the_identity():
    sl33 = build_sl(3, 3)
    identity = sl33.lift_to_algebra({(a, a): 1 for a in range(6)})
    psl33, projection = quotient(sl33.algebra, span([identity], sl33.algebra.dim), "psl(3|3)")

    assert psl33.dim == 34
    assert check_super_jacobi(psl33) == []
    assert center_of(psl33, Subspace.full(34)).dim == 0
    assert not any(projection(identity))
