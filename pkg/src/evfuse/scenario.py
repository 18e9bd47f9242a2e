"""Scenario files (JSON, `format: 1`) and curve exports (CSV with # headers).

Scenario schema::

    {
      "format": 1,
      "frame": ["A", "B", "C"],
      "defaults": {"curve": {"c": ..., "L": ..., "gamma": ..., "x_r": ...}},
      "reports": [
        {"source_id": "radar-1",
         "masses": {"A": 0.6, "A,C": 0.25, ...},   # subset strings: comma-joined labels
         "reliability": 0.55,                       # optional direct confidence
         "distance": 3.2,                           # optional, used with a curve
         "curve": {"c": ..., "L": ..., "gamma": ..., "x_r": ...}}  # optional
      ]
    }

`defaults.curve` applies to reports that give a distance without their own
curve. `gamma` defaults to 0 wherever a curve is given without it.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .confidence import CurveParams, DEFAULT_GRID_SIZE, _amplitude_raw, confidence_curve
from .errors import ParseError, ValidationError
from .evidence import Frame, bpa_new
from .pipeline import SensorReport

SCENARIO_FORMAT = 1

_CURVE_KEYS = ("c", "L", "gamma", "x_r")


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def load_scenario(path: str) -> tuple[Frame, list[SensorReport]]:
    """Read and parse a scenario file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scenario(fh.read())


def parse_scenario(text: str) -> tuple[Frame, list[SensorReport]]:
    """Parse a scenario document into a frame and sensor reports."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError("scenario root must be an object")
    fmt = doc.get("format")
    if fmt != SCENARIO_FORMAT:
        raise ParseError(f"unsupported or missing format {fmt!r}; expected {SCENARIO_FORMAT}")

    labels = doc.get("frame")
    if not isinstance(labels, list) or not all(isinstance(lab, str) for lab in labels):
        raise ParseError("frame must be a list of strings")
    try:
        frame = Frame(tuple(labels))
    except ValueError as exc:
        raise ValidationError(f"frame: {exc}") from None

    defaults = doc.get("defaults", {})
    if not isinstance(defaults, dict):
        raise ParseError("defaults must be an object")
    default_curve = _parse_curve(defaults["curve"], "defaults.curve") if "curve" in defaults else None

    raw_reports = doc.get("reports")
    if not isinstance(raw_reports, list):
        raise ParseError("reports must be a list")
    if not raw_reports:
        raise ValidationError("no reports")
    reports = [_parse_report(frame, raw, i, default_curve) for i, raw in enumerate(raw_reports)]

    ids = [r.source_id for r in reports]
    dupes = sorted({sid for sid in ids if ids.count(sid) > 1})
    if dupes:
        raise ValidationError(f"duplicate source_id: {dupes}")
    return frame, reports


def _parse_report(
    frame: Frame, raw: Any, index: int, default_curve: CurveParams | None
) -> SensorReport:
    where = f"reports[{index}]"
    if not isinstance(raw, dict):
        raise ParseError(f"{where} must be an object")
    source_id = raw.get("source_id")
    if not isinstance(source_id, str) or not source_id:
        raise ParseError(f"{where}.source_id must be a nonempty string")

    masses_raw = raw.get("masses")
    if not isinstance(masses_raw, dict) or not masses_raw:
        raise ParseError(f"{where}.masses must be a nonempty object")
    entries = []
    for subset_str, mass in masses_raw.items():
        if not _is_number(mass):
            raise ParseError(f"{where}.masses[{subset_str!r}] must be a number")
        entries.append((_split_subset(subset_str, where), float(mass)))
    try:
        bpa = bpa_new(frame, entries)
    except ValueError as exc:
        raise ValidationError(f"report {source_id!r}: {exc}", source_id=source_id) from None

    reliability = raw.get("reliability")
    if reliability is not None and not _is_number(reliability):
        raise ParseError(f"{where}.reliability must be a number")
    distance = raw.get("distance")
    if distance is not None and not _is_number(distance):
        raise ParseError(f"{where}.distance must be a number")

    curve = _parse_curve(raw["curve"], f"{where}.curve") if "curve" in raw else None
    if curve is None and distance is not None:
        curve = default_curve
        if curve is None:
            raise ValidationError(
                f"report {source_id!r} gives a distance but no curve (and no defaults.curve)",
                source_id=source_id,
            )
    try:
        return SensorReport(
            source_id=source_id,
            bpa=bpa,
            reliability=None if reliability is None else float(reliability),
            distance=None if distance is None else float(distance),
            curve=curve,
        )
    except ValueError as exc:
        raise ValidationError(f"report {source_id!r}: {exc}", source_id=source_id) from None


def _split_subset(subset_str: str, where: str) -> tuple[str, ...]:
    parts = tuple(part.strip() for part in subset_str.split(","))
    if any(not part for part in parts):
        raise ParseError(f"{where}.masses: bad subset string {subset_str!r}")
    return parts


def _parse_curve(raw: Any, where: str) -> CurveParams:
    if not isinstance(raw, dict):
        raise ParseError(f"{where} must be an object")
    unknown = sorted(set(raw) - set(_CURVE_KEYS))
    if unknown:
        raise ParseError(f"{where} has unknown keys {unknown}")
    missing = sorted({"c", "L", "x_r"} - set(raw))
    if missing:
        raise ParseError(f"{where} is missing keys {missing}")
    values = {}
    for key in _CURVE_KEYS:
        if key == "gamma" and key not in raw:
            values[key] = 0.0
            continue
        if not _is_number(raw[key]):
            raise ParseError(f"{where}.{key} must be a number")
        values[key] = float(raw[key])
    try:
        return CurveParams(c=values["c"], big_l=values["L"], gamma=values["gamma"], x_r=values["x_r"])
    except ValueError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def subset_string(frame: Frame, bits: int) -> str:
    """Comma-joined labels of a subset mask, in frame order."""
    return ",".join(frame.labels_of(bits))


def serialize_scenario(frame: Frame, reports: Sequence[SensorReport]) -> str:
    """Render domain objects back to scenario JSON (parse-stable)."""
    for lab in frame.labels:
        if "," in lab or lab != lab.strip():
            raise ValueError(f"label {lab!r} cannot round-trip through subset strings")
    doc: dict[str, Any] = {"format": SCENARIO_FORMAT, "frame": list(frame.labels), "reports": []}
    for report in reports:
        order = sorted(report.bpa.masses, key=lambda b: (b.bit_count(), b))
        entry: dict[str, Any] = {
            "source_id": report.source_id,
            "masses": {subset_string(frame, b): report.bpa.masses[b] for b in order},
        }
        if report.reliability is not None:
            entry["reliability"] = report.reliability
        if report.distance is not None:
            entry["distance"] = report.distance
        if report.curve is not None:
            entry["curve"] = {
                "c": report.curve.c,
                "L": report.curve.big_l,
                "gamma": report.curve.gamma,
                "x_r": report.curve.x_r,
            }
        doc["reports"].append(entry)
    return json.dumps(doc, indent=2) + "\n"


def render_curve_export(
    params: CurveParams,
    grid_size: int = DEFAULT_GRID_SIZE,
    dirichlet: bool = False,
) -> str:
    """CSV text with `#` header lines and `x,P,mu` rows.

    Floats are written with repr, so identical parameters produce
    byte-identical output.
    """
    curve = confidence_curve(params, grid_size=grid_size, dirichlet=dirichlet)
    raw = _amplitude_raw(params, curve.xs, dirichlet)
    ps = raw * raw
    mode = "dirichlet" if dirichlet else "sum"
    lines = [
        "# confidence-curve export",
        f"# c={params.c!r} L={params.big_l!r} gamma={params.gamma!r} x_r={params.x_r!r}"
        f" points={grid_size} mode={mode}",
        f"# alpha={params.alpha!r}",
        f"# x0={curve.x0!r} norm={curve.norm!r}",
        "# columns: x,P,mu",
    ]
    lines.extend(
        f"{float(x)!r},{float(p)!r},{float(mu)!r}"
        for x, p, mu in zip(curve.xs, ps, curve.mus)
    )
    return "\n".join(lines) + "\n"
