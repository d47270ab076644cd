"""
Renderings of orbit reports and verification summaries: JSON for machines, markdown tables laid
out like the printed classification tables, and ASCII pyramids for partitions.
"""

import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from .analysis import OrbitReport, analyze_orbit
from .exceptional import EXCEPTIONAL, build_exceptional, orbit_reps
from .field import QQ_ALPHA_FIELD, ScalarField, render_scalar
from .log import log
from .matrixalg import SuperPartition, pyramid
from .verify import VerificationReport

FORMATS = ("json", "md", "ascii")

TABLE_FILES = {"D21": "table2_D21.md", "G3": "table3_G3.md", "F4": "table4_F4.md"}

CHECK = "✓"


def render_json(document: Any) -> str:
    "Byte-stable JSON: sorted keys, two-space indent, exact scalars as strings."
    return json.dumps(
        document, sort_keys=True, indent=2, ensure_ascii=False, default=render_scalar
    )


def _mark(flag: bool | None) -> str:
    return CHECK if flag else ""


def _yes(flag: bool | None) -> str:
    return "yes" if flag else "-"


def _row(cells: Sequence[str]) -> str:
    "A markdown table row; pipes inside partitions are escaped."
    return "| " + " | ".join(cell.replace("|", "\\|") for cell in cells) + " |"


def markdown_table(title: str, reports: Sequence[OrbitReport]) -> str:
    lines = [
        f"# {title}",
        "",
        _row(["Orbit", "Reachable", "Strongly reachable", "Panyushev"]),
        _row(["---"] * 4),
    ]
    for report in reports:
        flags = report.flags
        lines.append(
            _row(
                [
                    report.orbit,
                    _mark(flags.reachable),
                    _mark(flags.strongly_reachable),
                    _mark(flags.panyushev_generated),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def ascii_table(title: str, reports: Sequence[OrbitReport]) -> str:
    "The same table in fixed-width columns, with - for an unset flag."
    header = ("orbit", "reachable", "strongly reachable", "Panyushev")
    rows = [
        (
            report.orbit,
            _yes(report.flags.reachable),
            _yes(report.flags.strongly_reachable),
            _yes(report.flags.panyushev_generated),
        )
        for report in reports
    ]
    widths = [max(len(row[c]) for row in [header, *rows]) for c in range(len(header))]

    def line(cells: Sequence[str]) -> str:
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths, strict=True)).rstrip()

    lines = [title, "", line(header), line(["-" * w for w in widths])]
    lines.extend(line(row) for row in rows)
    return "\n".join(lines) + "\n"


def render_orbit_markdown(report: OrbitReport) -> str:
    lines = [markdown_table(f"{report.algebra}, e = {report.orbit}", [report]).rstrip("\n"), ""]

    dims = report.dims
    lines.append(
        f"dim g = {dims['g']}, dim g^e = {dims['g_e']}, "
        f"dim [g^e, g^e] = {dims['derived']}, dim z(g^e) = {dims['centre']}"
    )
    graded = ", ".join(f"{j}: {d}" for j, d in sorted(report.graded_dims.items()))
    lines.append(f"graded pieces of g^e: {graded}")

    flags = report.flags
    lines.append(f"layerwise Panyushev: {flags.panyushev_layerwise}")
    lines.append(f"e in [g^e(1), g^e(1)]: {flags.degree_one}")
    if flags.criterion is not None:
        lines.append(f"partition criterion: {flags.criterion}")
    if report.diagram is not None:
        labels = " ".join(str(label) for label in report.diagram.labels)
        lines.append(f"diagram labels: {labels} (n2 = {report.diagram.n2})")
    for problem in report.falsifications:
        lines.append(f"FALSIFIED: {problem}")
    return "\n".join(lines) + "\n"


def render_orbit_ascii(report: OrbitReport, partition: SuperPartition | None = None) -> str:
    lines = []
    if partition is not None:
        lines.extend([f"pyramid of ({partition}):", pyramid(partition).render(), ""])

    flags = report.flags
    lines.append(f"{report.algebra}  e = {report.orbit}")
    lines.append(
        f"  reachable={_mark(flags.reachable) or '-'}"
        f"  strongly reachable={_mark(flags.strongly_reachable) or '-'}"
        f"  Panyushev={_mark(flags.panyushev_generated) or '-'}"
    )
    graded = " ".join(f"{j}:{d}" for j, d in sorted(report.graded_dims.items()))
    lines.append(f"  g^e grades  {graded}")
    return "\n".join(lines) + "\n"


def render_orbit(
    report: OrbitReport, output_format: str, partition: SuperPartition | None = None
) -> str:
    match output_format:
        case "json":
            return render_json(report.to_dict()) + "\n"
        case "md":
            return render_orbit_markdown(report)
        case "ascii":
            return render_orbit_ascii(report, partition)
        case _:
            raise ValueError(f"unknown format '{output_format}', expected one of {FORMATS}")


def render_verification(report: VerificationReport, output_format: str) -> str:
    if output_format == "json":
        return render_json(report.to_dict()) + "\n"
    if output_format not in ("md", "ascii"):
        raise ValueError(f"unknown format '{output_format}', expected one of {FORMATS}")

    lines = [
        f"{report.theorem}: {len(report.instances)} instances, "
        f"{len(report.counterexamples)} counterexamples"
    ]
    for instance in report.counterexamples:
        for problem in instance.problems:
            lines.append(f"  {instance.family} {instance.subject}: {problem}")
    return "\n".join(lines) + "\n"


def exceptional_table(key: str, field: ScalarField = QQ_ALPHA_FIELD) -> list[OrbitReport]:
    "Every orbit of an exceptional algebra analysed, in table order."
    A = build_exceptional(key, field)
    return [analyze_orbit(A, rep.element, rep.h, rep.label) for rep in orbit_reps(A)]


def _table_title(reports: Sequence[OrbitReport]) -> str:
    return f"Reachable, strongly reachable and Panyushev elements in {reports[0].algebra}"


def table_markdown(key: str, field: ScalarField = QQ_ALPHA_FIELD) -> str:
    reports = exceptional_table(key, field)
    return markdown_table(_table_title(reports), reports)


def render_tables(
    keys: Sequence[str], output_format: str, field: ScalarField = QQ_ALPHA_FIELD
) -> str:
    tables = {key: exceptional_table(key, field) for key in keys}
    match output_format:
        case "json":
            document = {
                key: [report.to_dict() for report in reports] for key, reports in tables.items()
            }
            return render_json(document) + "\n"
        case "md":
            return "\n".join(
                markdown_table(_table_title(reports), reports) for reports in tables.values()
            )
        case "ascii":
            return "\n".join(
                ascii_table(_table_title(reports), reports) for reports in tables.values()
            )
        case _:
            raise ValueError(f"unknown format '{output_format}', expected one of {FORMATS}")


def write_tables(
    output_dir: Path, field: ScalarField = QQ_ALPHA_FIELD, keys: Sequence[str] = EXCEPTIONAL
) -> list[Path]:
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for key in keys:
        path = output_dir / TABLE_FILES[key]
        path.write_text(table_markdown(key, field), encoding="utf-8")
        log.info(f"wrote {path}")
        written.append(path)
    return written


def render_enumeration(reports: Sequence[OrbitReport], output_format: str) -> str:
    if output_format == "json":
        return render_json([report.to_dict() for report in reports]) + "\n"

    if output_format == "ascii":
        return "".join(
            render_orbit_ascii(report, SuperPartition.parse(report.orbit)) + "\n"
            for report in reports
        )

    lines = [
        _row(["Algebra", "Partition", "Criterion", "Reachable", "Strongly reachable", "Panyushev"]),
        _row(["---"] * 6),
    ]
    for report in reports:
        flags = report.flags
        lines.append(
            _row(
                [
                    report.algebra,
                    report.orbit,
                    _mark(flags.criterion),
                    _mark(flags.reachable),
                    _mark(flags.strongly_reachable),
                    _mark(flags.panyushev_generated),
                ]
            )
        )
    return "\n".join(lines) + "\n"
