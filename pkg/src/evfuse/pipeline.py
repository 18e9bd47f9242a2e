"""Fusion strategies: classical fold, equal-weight averaging, reliability weighting.

The averaging strategies follow Murphy ("Combining belief functions when
evidence conflicts", Decision Support Systems 29, 2000): average the
assignments, then Dempster-combine the average with itself once per extra
contributing report. The reliability-weighted strategy replaces the equal
weights with credibilities derived from per-sensor confidence coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence

from .confidence import CurveParams, confidence_curve, reliability_at
from .errors import AllUnreliable, FusionError, TotalConflict, ValidationError
from .evidence import Bpa, combine_dempster, conflict, weighted_average

STRATEGY_CLASSICAL = "classical"
STRATEGY_MURPHY = "murphy"
STRATEGY_RELIABILITY = "reliability-weighted"
STRATEGIES = (STRATEGY_CLASSICAL, STRATEGY_MURPHY, STRATEGY_RELIABILITY)

RELIABILITY_FLOOR = 1e-12


@dataclass(frozen=True)
class SensorReport:
    """One sensor's evidence plus how to obtain its reliability.

    Reliability is either given directly (in [0, 1]) or derived from the
    sensor's confidence curve at the reported distance. A direct value
    wins when both routes are present.
    """

    source_id: str
    bpa: Bpa
    reliability: float | None = None
    distance: float | None = None
    curve: CurveParams | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.source_id, str) or not self.source_id:
            raise ValueError("source_id must be a nonempty string")
        if self.reliability is not None and not 0.0 <= self.reliability <= 1.0:
            raise ValueError(f"direct reliability must lie in [0, 1], got {self.reliability!r}")
        if self.distance is not None and not self.distance > 0.0:
            raise ValueError(f"distance must be > 0, got {self.distance!r}")


def resolve_reliability(report: SensorReport) -> float:
    """Reliability of one report; the direct value wins over the curve route."""
    if report.reliability is not None:
        return report.reliability
    if report.distance is not None and report.curve is not None:
        return reliability_at(confidence_curve(report.curve), report.distance)
    raise ValidationError(
        f"report {report.source_id!r} has neither a reliability nor a (distance, curve) pair",
        source_id=report.source_id,
    )


def credibility(mus: Sequence[float]) -> list[float]:
    """Normalize nonnegative reliabilities into weights summing to one."""
    if not mus:
        raise ValueError("need at least one reliability")
    if any(mu < 0.0 for mu in mus):
        raise ValueError("reliabilities must be nonnegative")
    total = math.fsum(mus)
    if total <= RELIABILITY_FLOOR:
        raise AllUnreliable(f"total reliability {total!r} carries no information")
    return [mu / total for mu in mus]


@dataclass(frozen=True)
class FusionResult:
    """Fused assignment with per-source weights and per-step conflict values.

    credibilities is empty for the classical strategy; step_conflicts holds
    the conflict coefficient of each binary combination, in order.
    """

    fused: Bpa
    credibilities: Mapping[str, float]
    strategy: str
    step_conflicts: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "credibilities", MappingProxyType(dict(self.credibilities)))


def _tracked_fold(boes: Sequence[Bpa]) -> tuple[Bpa, list[float]]:
    acc = boes[0]
    ks: list[float] = []
    for step, m in enumerate(boes[1:], start=1):
        ks.append(conflict(acc, m))
        try:
            acc = combine_dempster(acc, m)
        except TotalConflict as exc:
            exc.step = step
            exc.args = (f"combination step {step}: {exc.args[0]}",)
            raise
    return acc, ks


def fuse(reports: Sequence[SensorReport], strategy: str) -> FusionResult:
    """Fuse the reports with one strategy; see STRATEGIES for the names."""
    if not reports:
        raise ValueError("need at least one report")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    ids = [r.source_id for r in reports]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate source_id among reports")
    bpas = [r.bpa for r in reports]
    k = len(reports)

    if strategy == STRATEGY_CLASSICAL:
        fused, ks = _tracked_fold(bpas)
        return FusionResult(fused, {}, strategy, tuple(ks))

    if strategy == STRATEGY_MURPHY:
        creds = [1.0 / k] * k
        averaged = weighted_average(bpas, creds)
        fused, ks = _tracked_fold([averaged] * k)
        return FusionResult(fused, dict(zip(ids, creds)), strategy, tuple(ks))

    mus = [resolve_reliability(r) for r in reports]
    creds = credibility(mus)
    averaged = weighted_average(bpas, creds)
    copies = sum(1 for mu in mus if mu > 0.0)  # zero-reliability reports are inert
    fused, ks = _tracked_fold([averaged] * copies)
    return FusionResult(fused, dict(zip(ids, creds)), strategy, tuple(ks))


@dataclass(frozen=True)
class StrategyOutcome:
    """Per-strategy row of a comparison run; exactly one of result/error is set."""

    strategy: str
    result: FusionResult | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.result is not None


def compare_strategies(reports: Sequence[SensorReport]) -> list[StrategyOutcome]:
    """Run every strategy, recording per-row failures instead of raising."""
    rows: list[StrategyOutcome] = []
    for strategy in STRATEGIES:
        try:
            rows.append(StrategyOutcome(strategy, result=fuse(reports, strategy)))
        except FusionError as exc:
            rows.append(StrategyOutcome(strategy, error=str(exc)))
    return rows
