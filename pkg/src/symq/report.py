"""Deterministic JSON and text reports.

Every quandle report carries the same fixed key set; a field that does not
apply is explicitly null, never missing.  JSON rendering sorts keys and uses
fixed separators so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json

from . import __about__

QUANDLE_REPORT_KEYS = (
    "tool_version",
    "group_spec",
    "order",
    "automorphism",
    "is_kei",
    "kei_witness",
    "is_connected",
    "orbit_count",
    "good_involutions",
    "fixed_two_torsion",
    "sq_classes_bruteforce",
    "sq_classes_theorem",
    "agreement",
    "notes",
    "elapsed_ms",
)


def quandle_report(
    *,
    group_spec: str | None,
    order: int,
    automorphism: list[int] | None,
    is_kei: bool,
    kei_witness: list[int] | None,
    is_connected: bool,
    orbit_count: int,
    good_involutions: list[list[int]] | None,
    fixed_two_torsion: list[int] | None,
    sq_classes_bruteforce: int | None,
    sq_classes_theorem: int | None,
    agreement: bool | None,
    notes: list[str],
    elapsed_ms: int | None,
) -> dict:
    report = {
        "tool_version": __about__.__version__,
        "group_spec": group_spec,
        "order": order,
        "automorphism": automorphism,
        "is_kei": is_kei,
        "kei_witness": kei_witness,
        "is_connected": is_connected,
        "orbit_count": orbit_count,
        "good_involutions": good_involutions,
        "fixed_two_torsion": fixed_two_torsion,
        "sq_classes_bruteforce": sq_classes_bruteforce,
        "sq_classes_theorem": sq_classes_theorem,
        "agreement": agreement,
        "notes": notes,
        "elapsed_ms": elapsed_ms,
    }
    assert tuple(report) == QUANDLE_REPORT_KEYS
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def _render_value(value) -> str:
    if isinstance(value, list) and value and isinstance(value[0], list):
        lines = [""]
        lines.extend("  " + " ".join(str(x) for x in row) for row in value)
        return "\n".join(lines)
    return json.dumps(value)


def to_text(report: dict) -> str:
    lines = [f"{key}: {_render_value(report[key])}" for key in sorted(report)]
    return "\n".join(lines) + "\n"


def emit_report(report: dict, fmt: str = "json") -> str:
    """Render one report; permutation lists appear one per line in text mode."""
    if fmt == "json":
        return to_json(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def emit_reports(reports: list[dict], fmt: str = "json") -> str:
    """Render a report stream: JSON lines, or text blocks split by blank lines."""
    if fmt == "json":
        return "".join(to_json(r) for r in reports)
    if fmt == "text":
        return "\n".join(to_text(r) for r in reports)
    raise ValueError(f"unknown format {fmt!r}")
