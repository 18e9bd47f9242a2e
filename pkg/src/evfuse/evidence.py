"""Frame-of-discernment algebra, mass assignments, and Dempster's combination rule.

Subsets of the frame are encoded as 64-bit masks, so intersection is a single
AND and exhaustive enumeration stays cheap for the small frames typical of
target recognition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    EmptyFocalSet,
    FrameMismatch,
    MassSumViolation,
    TotalConflict,
    UnknownLabel,
    WeightSumViolation,
)

MASS_SUM_TOL = 1e-9
TOTAL_CONFLICT_TOL = 1e-12
MAX_FRAME_SIZE = 64


@dataclass(frozen=True)
class Frame:
    """Ordered set of mutually exclusive, exhaustive hypotheses."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("a frame needs at least one hypothesis")
        if len(labels) > MAX_FRAME_SIZE:
            raise ValueError(f"frame size is capped at {MAX_FRAME_SIZE}")
        if any(not isinstance(lab, str) or not lab for lab in labels):
            raise ValueError("hypothesis labels must be nonempty strings")
        if len(set(labels)) != len(labels):
            raise ValueError("hypothesis labels must be unique")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def theta(self) -> int:
        """Mask of the whole frame."""
        return (1 << self.size) - 1

    def mask_of(self, subset: str | Iterable[str]) -> int:
        """Bitmask of a subset given as one label or an iterable of labels."""
        if isinstance(subset, str):
            subset = (subset,)
        bits = 0
        for lab in subset:
            try:
                bits |= 1 << self._index[lab]
            except KeyError:
                raise UnknownLabel(f"label {lab!r} is not in frame {self.labels}") from None
        return bits

    def labels_of(self, bits: int) -> tuple[str, ...]:
        """Labels of a subset mask, in frame order."""
        if not 0 <= bits <= self.theta:
            raise ValueError(f"mask {bits:#x} does not fit a {self.size}-hypothesis frame")
        return tuple(lab for i, lab in enumerate(self.labels) if bits >> i & 1)


@dataclass(frozen=True)
class FocalSet:
    """Nonempty subset of a frame, as stored in a mass assignment."""

    frame: Frame
    bits: int

    def __post_init__(self) -> None:
        if self.bits == 0:
            raise EmptyFocalSet("the empty set cannot be a focal element")
        if not 0 < self.bits <= self.frame.theta:
            raise ValueError(f"mask {self.bits:#x} does not fit the frame")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.frame.labels_of(self.bits)


@dataclass(frozen=True)
class Bpa:
    """Basic probability assignment: focal-set mask -> strictly positive mass.

    Construction validates everything: zero masses are dropped (so "focal
    element" and "stored entry" coincide), the empty set is rejected, and the
    total mass must be 1 within MASS_SUM_TOL.
    """

    frame: Frame
    masses: Mapping[int, float]

    def __post_init__(self) -> None:
        cleaned: dict[int, float] = {}
        for bits, mass in self.masses.items():
            if mass < 0.0:
                raise ValueError(f"negative mass {mass!r} on {self.frame.labels_of(bits)}")
            if mass == 0.0:
                continue
            if bits == 0:
                raise EmptyFocalSet("mass on the empty set")
            if not 0 < bits <= self.frame.theta:
                raise ValueError(f"mask {bits:#x} does not fit the frame")
            cleaned[bits] = mass
        total = math.fsum(cleaned.values())
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise MassSumViolation(f"masses sum to {total!r}, not 1")
        object.__setattr__(self, "masses", MappingProxyType(cleaned))

    def mass(self, subset: str | Iterable[str]) -> float:
        """Mass on exactly this subset; 0.0 if it is not a focal element."""
        return self.masses.get(self.frame.mask_of(subset), 0.0)

    def focal_sets(self) -> tuple[FocalSet, ...]:
        return tuple(FocalSet(self.frame, bits) for bits in self.masses)

    def items(self) -> Iterator[tuple[FocalSet, float]]:
        for bits, mass in self.masses.items():
            yield FocalSet(self.frame, bits), mass

    def by_labels(self) -> dict[tuple[str, ...], float]:
        """Readable view keyed by label tuples, smallest subsets first."""
        order = sorted(self.masses, key=lambda b: (b.bit_count(), b))
        return {self.frame.labels_of(b): self.masses[b] for b in order}


def bpa_new(frame: Frame, entries: Iterable[tuple[str | Iterable[str], float]]) -> Bpa:
    """Build a validated assignment from (subset labels, mass) pairs.

    A bare string names a single hypothesis. Duplicate subsets accumulate;
    zero masses are dropped by construction.
    """
    masses: dict[int, float] = {}
    for subset, mass in entries:
        mass = float(mass)
        if mass < 0.0:
            raise ValueError(f"negative mass {mass!r} on {subset!r}")
        bits = frame.mask_of(subset)
        if bits == 0:
            raise EmptyFocalSet("cannot assign mass to the empty set")
        masses[bits] = masses.get(bits, 0.0) + mass
    return Bpa(frame, masses)


def vacuous(frame: Frame) -> Bpa:
    """Total-ignorance assignment: all mass on the whole frame."""
    return Bpa(frame, {frame.theta: 1.0})


def _check_same_frame(m1: Bpa, m2: Bpa) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatch(f"frames differ: {m1.frame.labels} vs {m2.frame.labels}")


def conflict(m1: Bpa, m2: Bpa) -> float:
    """Conflict coefficient: total product mass on empty intersections."""
    _check_same_frame(m1, m2)
    products = [
        v1 * v2
        for b1, v1 in m1.masses.items()
        for b2, v2 in m2.masses.items()
        if b1 & b2 == 0
    ]
    return min(1.0, math.fsum(products))


def combine_dempster(m1: Bpa, m2: Bpa) -> Bpa:
    """Dempster's rule: conjunctive combination renormalized by 1 - K."""
    _check_same_frame(m1, m2)
    combined: dict[int, float] = {}
    conflicting: list[float] = []
    for b1, v1 in m1.masses.items():
        for b2, v2 in m2.masses.items():
            inter = b1 & b2
            if inter:
                combined[inter] = combined.get(inter, 0.0) + v1 * v2
            else:
                conflicting.append(v1 * v2)
    k = math.fsum(conflicting)
    if k >= 1.0 - TOTAL_CONFLICT_TOL:
        raise TotalConflict(f"conflict coefficient {k!r} leaves nothing to renormalize")
    norm = 1.0 - k
    return Bpa(m1.frame, {bits: v / norm for bits, v in combined.items()})


def combine_sequential(boes: Sequence[Bpa]) -> Bpa:
    """Left fold of Dempster's rule over a nonempty sequence.

    On failure the raised TotalConflict carries the index of the assignment
    whose incorporation produced total conflict.
    """
    if not boes:
        raise ValueError("need at least one assignment to combine")
    acc = boes[0]
    for step, m in enumerate(boes[1:], start=1):
        try:
            acc = combine_dempster(acc, m)
        except TotalConflict as exc:
            exc.step = step
            exc.args = (f"combination step {step}: {exc.args[0]}",)
            raise
    return acc


def weighted_average(boes: Sequence[Bpa], weights: Sequence[float]) -> Bpa:
    """Convex mixture of assignments over the union of their focal sets."""
    if not boes:
        raise ValueError("need at least one assignment to average")
    if len(boes) != len(weights):
        raise ValueError(f"{len(boes)} assignments but {len(weights)} weights")
    if any(w < 0.0 for w in weights):
        raise ValueError("weights must be nonnegative")
    total = math.fsum(weights)
    if abs(total - 1.0) > MASS_SUM_TOL:
        raise WeightSumViolation(f"weights sum to {total!r}, not 1")
    frame = boes[0].frame
    mixed: dict[int, float] = {}
    for m, w in zip(boes, weights):
        if m.frame != frame:
            raise FrameMismatch(f"frames differ: {frame.labels} vs {m.frame.labels}")
        if w == 0.0:
            continue
        for bits, v in m.masses.items():
            mixed[bits] = mixed.get(bits, 0.0) + w * v
    return Bpa(frame, mixed)


def self_combine(m: Bpa, k: int) -> Bpa:
    """Dempster combination of k copies of an assignment (k >= 1)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    acc = m
    for _ in range(k - 1):
        acc = combine_dempster(acc, m)
    return acc
