import json
from fractions import Fraction

import pytest

from superorbit.analysis import analyze_partition
from superorbit.matrixalg import SuperPartition
from superorbit.report import (
    TABLE_FILES,
    ascii_table,
    markdown_table,
    render_enumeration,
    render_json,
    render_orbit,
    render_verification,
    write_tables,
)
from superorbit.verify import InstanceResult, VerificationReport


@pytest.fixture(scope="module")
def sl21():
    return analyze_partition("sl", "2|1")


def test_json_is_sorted_and_exact():
    assert render_json({"b": 1, "a": Fraction(1, 2)}) == '{\n  "a": "1/2",\n  "b": 1\n}'


def test_orbit_json(sl21):
    document = json.loads(render_orbit(sl21, "json"))
    assert document["algebra"] == "sl(2|1)"
    assert document["graded_dims"] == {"0": 1, "1": 2, "2": 1}
    assert document["flags"]["reachable"] is True
    assert document["flags"]["strongly_reachable"] is False
    assert document["diagram"]["n2"] == 0


def test_orbit_markdown(sl21):
    lines = render_orbit(sl21, "md").splitlines()
    assert lines[0] == "# sl(2|1), e = 2|1"
    assert lines[2] == "| Orbit | Reachable | Strongly reachable | Panyushev |"
    assert lines[4] == "| 2\\|1 | ✓ |  | ✓ |"
    assert "dim g = 8, dim g^e = 4, dim [g^e, g^e] = 3, dim z(g^e) = 1" in lines
    assert "partition criterion: True" in lines


def test_orbit_ascii(sl21):
    text = render_orbit(sl21, "ascii", SuperPartition.parse("2|1"))
    assert text.startswith("pyramid of (2|1):\n")
    assert "sl(2|1)  e = 2|1" in text
    assert "reachable=✓  strongly reachable=-  Panyushev=✓" in text


def test_unknown_format(sl21):
    with pytest.raises(ValueError, match="unknown format"):
        render_orbit(sl21, "html")


def test_markdown_table(sl21):
    table = markdown_table("Small", [sl21, sl21])
    assert table.startswith("# Small\n\n")
    assert table.count("\n") == 6


def test_verification_summary():
    bad = InstanceResult("sl", "3|1", {}, ["conditions disagree"])
    report = VerificationReport("theorem1", ("sl",), [InstanceResult("sl", "2|1", {}), bad])
    assert render_verification(report, "md") == (
        "theorem1: 2 instances, 1 counterexamples\n  sl 3|1: conditions disagree\n"
    )
    assert json.loads(render_verification(report, "json"))["instances"] == 2


def test_enumeration_markdown(sl21):
    lines = render_enumeration([sl21], "md").splitlines()
    assert lines[0] == (
        "| Algebra | Partition | Criterion | Reachable | Strongly reachable | Panyushev |"
    )
    assert lines[2] == "| sl(2\\|1) | 2\\|1 | ✓ | ✓ |  | ✓ |"
    assert json.loads(render_enumeration([sl21], "json"))[0]["orbit"] == "2|1"


def test_write_g3_table(tmp_path):
    (path,) = write_tables(tmp_path / "tables", keys=("G3",))
    assert path.name == TABLE_FILES["G3"]

    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "# Reachable, strongly reachable and Panyushev elements in G(3)"
    assert len(lines) == 4 + 10
    assert "| x1 | ✓ | ✓ |  |" in lines
    assert "| 0 | ✓ | ✓ | ✓ |" in lines


def test_ascii_table(sl21):
    assert ascii_table("sl(2|1)", [sl21]) == (
        "sl(2|1)\n"
        "\n"
        "orbit  reachable  strongly reachable  Panyushev\n"
        "-----  ---------  ------------------  ---------\n"
        "2|1    yes        -                   yes\n"
    )


def test_verification_rejects_unknown_format():
    with pytest.raises(ValueError, match="unknown format 'csv'"):
        render_verification(VerificationReport("jacobi", ("G3",), []), "csv")
