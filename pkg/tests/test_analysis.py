import pytest

from superorbit.analysis import (
    analyze_orbit,
    analyze_partition,
    analyze_representative,
    center_of_centralizer,
    centre_is_e_powers,
    core_blocks,
    is_reachable,
    is_strongly_reachable,
    labelled_diagram_typeA,
    n2,
    osp_derived_check,
    panyushev_degree_one,
    predicted_centre_difference,
    pyramid_stats,
    reachability_criterion,
    satisfies_panyushev,
    two_free_core,
    two_free_core_check,
)
from superorbit.errors import UnknownOrbitError
from superorbit.exceptional import build_D21, build_G3
from superorbit.matrixalg import SuperPartition, nilpotent, pyramid

TWO_TWO = SuperPartition.parse("2|2")


@pytest.mark.parametrize(
    "text,expected",
    [("2,2,1", True), ("3,1", False), ("2,2", False), ("2|1", True), ("1|1,1", True)],
)
def test_reachability_criterion(text, expected):
    assert reachability_criterion(SuperPartition.parse(text)) is expected


def test_sl_two_one():
    report = analyze_partition("sl", "2|1")
    assert report.algebra == "sl(2|1)"
    assert report.orbit == "2|1"
    assert report.dims == {"g": 8, "g_e": 4, "derived": 3, "centre": 1}
    assert report.graded_dims == {0: 1, 1: 2, 2: 1}

    flags = report.flags
    assert flags.reachable
    assert not flags.strongly_reachable
    assert flags.panyushev_generated
    assert flags.panyushev_layerwise
    assert flags.degree_one
    assert flags.criterion
    assert report.falsifications == []


def test_single_property_checks_agree_with_report():
    data = nilpotent("sl", "2|1")
    A = data.algebra.algebra
    assert is_reachable(A, data.e)
    assert not is_strongly_reachable(A, data.e)
    assert satisfies_panyushev(A, data.e, data.h) == (True, True)
    assert panyushev_degree_one(A, data.e, data.h)


def test_zero_is_reachable():
    data = nilpotent("sl", "1,1|1")
    A = data.algebra.algebra
    assert not any(data.e)
    assert is_reachable(A, data.e)
    assert is_strongly_reachable(A, data.e)


def test_sl_three_two():
    report = analyze_partition("sl", "3|2")
    assert report.dims["g_e"] == 8
    assert report.dims["centre"] == 2
    assert report.graded_dims == {0: 1, 1: 2, 2: 2, 3: 2, 4: 1}
    assert report.flags.criterion is False

    # the odd pair between the two rows anticommutes to e, but g^e(1) is only that pair
    assert report.flags.reachable
    assert report.flags.degree_one
    assert not report.flags.panyushev_generated


def test_part_gap_of_two_is_not_reachable():
    report = analyze_partition("sl", "3|1")
    assert report.flags.criterion is False
    assert not report.flags.reachable
    assert not report.flags.degree_one


def test_centre_is_spanned_by_powers_of_e():
    data = nilpotent("psl", TWO_TWO)
    assert center_of_centralizer(data.algebra.algebra, data.e).dim == 1
    assert centre_is_e_powers(data)


def test_non_nilpotent_element_is_rejected():
    data = nilpotent("sl", "2|1")
    with pytest.raises(ValueError, match="not ad-nilpotent"):
        analyze_orbit(data.algebra.algebra, data.h, data.h, "h")


def test_diagram_of_two_two():
    diagram = labelled_diagram_typeA(pyramid(TWO_TWO))
    assert diagram.nodes == (1, 2, 3)
    assert diagram.labels == (0, 2, 0)
    assert diagram.grey == (True, True, True)
    assert n2(diagram) == 1
    assert diagram.label_sum == 2
    assert not diagram.has_label_one
    assert diagram.to_dict()["nodes"][1] == {"node": 2, "label": 2, "kind": "grey"}

    core = two_free_core(diagram)
    assert core.nodes == (1, 3)
    assert core.labels == (0, 0)
    assert core_blocks(pyramid(TWO_TWO), diagram) == [[2, 0], [3, 1]]


def test_pyramid_stats_of_two_two():
    stats = pyramid_stats(pyramid(TWO_TWO))
    assert stats.columns == {-1: (2, 1, 1), 0: (0, 0, 0), 1: (2, 1, 1)}
    assert (stats.k, stats.tau, stats.sigma) == (2, 2, 1)
    assert stats.balanced
    assert not stats.has_label_one
    assert predicted_centre_difference(stats, 1) == 0


def test_two_free_core_of_two_two():
    result = two_free_core_check(nilpotent("psl", TWO_TWO))
    assert result.n2 == 1
    assert result.dim_centralizer == 6
    assert result.dim_core_centralizer == 5
    assert result.dim_centre == 1
    assert result.dim_core_centre == 1
    assert result.dimension_ok
    assert result.centre_ok
    assert result.to_dict()["predicted_centre_difference"] == 0


def test_centre_relation_of_two_one_one():
    P = pyramid(SuperPartition.parse("2|1,1"))
    stats = pyramid_stats(P)
    assert (stats.k, stats.tau, stats.sigma) == (2, 0, 1)
    assert not stats.balanced
    assert stats.has_label_one

    # the identity of sl(2|2) already sits inside g_0, so the stated relation is off by one
    result = two_free_core_check(nilpotent("psl", "2|1,1"))
    assert result.n2 == 0
    assert result.dimension_ok
    assert result.centre_difference == 0
    assert result.predicted_centre_difference == -1
    assert not result.centre_ok


def test_psl_report_carries_diagram():
    report = analyze_partition("psl", TWO_TWO)
    assert report.dims["g"] == 14
    assert report.dims["g_e"] == 6
    assert report.diagram is not None
    assert report.to_dict()["diagram"]["n2"] == 1


def test_osp_three_two():
    result = osp_derived_check(nilpotent("osp", "3|2"))
    assert result.n2_minus_dim > 0
    assert result.dim_derived == 2
    assert result.reachable

    report = analyze_partition("osp", "3|2")
    assert report.diagram is None
    assert report.flags.criterion is False
    assert report.flags.reachable


def test_osp_gap_example():
    # g^e is spanned by e, e^3 and one odd x with [x, x] a multiple of e^3
    data = nilpotent("osp", "1|4")
    assert not osp_derived_check(data).reachable

    report = analyze_partition("osp", "1|4")
    assert report.flags.criterion is False
    assert not report.flags.reachable
    assert report.graded_dims == {2: 1, 3: 1, 6: 1}


def test_g3_rows():
    G3 = build_G3()
    x1 = analyze_representative(G3, "x1")
    assert (x1.flags.reachable, x1.flags.strongly_reachable, x1.flags.panyushev_generated) == (
        True,
        True,
        False,
    )
    assert x1.flags.criterion is None

    zero = analyze_representative(G3, "0")
    assert zero.dims["g_e"] == zero.dims["g"] == 31

    with pytest.raises(UnknownOrbitError):
        analyze_representative(G3, "x3")


def test_d21_at_a_sample(sample_field):
    D21 = build_D21(sample_field)
    report = analyze_representative(D21, "E1 + E2 + E3")
    assert report.orbit == "E1+E2+E3"
    assert (
        report.flags.reachable,
        report.flags.strongly_reachable,
        report.flags.panyushev_generated,
    ) == (True, False, True)
