"""Unit-disk layouts, blockade radii, and embedding validation.

Distances are in micrometers. A layout is a sequence of 2D points plus a disk
radius; two atoms are adjacent exactly when their Euclidean distance is at
most the radius (closed disk, exact float comparison, no tolerance). Node
order is the canonical bit order for every bitstring produced elsewhere in
the package: node 0 is the leftmost bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar, Sequence

from .errors import DegenerateLayout, InvalidInput, UndefinedRadius

Point = tuple[float, float]


@dataclass(frozen=True)
class EmbeddedGraph:
    """2D atom layout whose adjacency is derived from a unit-disk rule.

    Adjacency is never stored independently: ``i ~ j`` iff ``i != j`` and
    ``dist(p_i, p_j) <= radius``.
    """

    positions: tuple[Point, ...]
    radius: float

    def __post_init__(self):
        if len(self.positions) < 1:
            raise InvalidInput("layout needs at least one atom")
        radius = float(self.radius)
        if not (math.isfinite(radius) and radius > 0):
            raise InvalidInput(f"unit-disk radius must be positive and finite, got {self.radius!r}")
        clean = []
        for k, p in enumerate(self.positions):
            if len(p) != 2:
                raise InvalidInput(f"atom {k}: expected a 2D point, got {p!r}")
            x, y = float(p[0]), float(p[1])
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidInput(f"atom {k}: non-finite coordinate {p!r}")
            clean.append((x, y))
        object.__setattr__(self, "positions", tuple(clean))
        object.__setattr__(self, "radius", radius)
        for i in range(len(clean)):
            for j in range(i + 1, len(clean)):
                if math.dist(clean[i], clean[j]) == 0.0:
                    raise DegenerateLayout(f"atoms {i} and {j} coincide at {clean[i]}")

    @property
    def n(self) -> int:
        return len(self.positions)

    def distance(self, i: int, j: int) -> float:
        return math.dist(self.positions[i], self.positions[j])

    def is_edge(self, i: int, j: int) -> bool:
        return i != j and self.distance(i, j) <= self.radius

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Adjacent pairs ``(i, j)`` with ``i < j``."""
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.distance(i, j) <= self.radius
        )

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)


@dataclass(frozen=True)
class HardwareConstraints:
    """Machine limits that embeddings and waveforms must respect."""

    min_pair_distance: float = 4.0  # um
    max_evolution_time: float = 4.0  # us
    max_rabi: float = 15.8  # rad/us
    max_detuning_abs: float = 125.0  # rad/us

    dimensions: ClassVar[int] = 2  # planar traps only

    def __post_init__(self):
        for name in ("min_pair_distance", "max_evolution_time", "max_rabi", "max_detuning_abs"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise InvalidInput(f"{name} must be strictly positive, got {v!r}")


@dataclass(frozen=True)
class Violation:
    """One hard-constraint breach: what, where, measured value, limit."""

    kind: str
    subject: tuple
    value: float
    limit: float


@dataclass(frozen=True)
class AmbiguityWarning:
    """A pair too close to the disk boundary to be a robust edge/non-edge."""

    kind: str
    pair: tuple[int, int]
    distance: float
    threshold: float


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    warnings: tuple[AmbiguityWarning, ...] = ()

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0

    def merged(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.violations + other.violations, self.warnings + other.warnings)


def build_unit_disk_graph(positions: Sequence[Sequence[float]], radius: float) -> EmbeddedGraph:
    """Build the graph whose edges are exactly the pairs within ``radius``.

    Raises DegenerateLayout for coincident points and InvalidInput for
    non-finite coordinates or a non-positive radius.
    """
    return EmbeddedGraph(tuple(tuple(p) for p in positions), float(radius))


def blockade_radius(c6: float, omega: float, delta: float) -> float:
    """Distance below which the pair interaction dominates the drive scale.

    Computed as ``(c6 / sqrt(omega**2 + delta**2)) ** (1/6)``; strictly
    decreasing in the drive scale and scaling as ``c6 ** (1/6)``.
    """
    if not (c6 > 0):
        raise InvalidInput(f"van der Waals coefficient must be positive, got {c6!r}")
    scale = math.hypot(omega, delta)
    if scale == 0.0:
        raise UndefinedRadius("blockade radius is undefined when drive and detuning are both zero")
    return (c6 / scale) ** (1.0 / 6.0)


def validate_embedding(graph: EmbeddedGraph, hw: HardwareConstraints | None = None) -> ValidationReport:
    """Report every atom pair closer than the hardware spacing floor.

    Reports, never throws: constraint findings land in the violation list
    and ``ok`` reflects whether it is empty.
    """
    hw = hw or HardwareConstraints()
    violations = []
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            d = graph.distance(i, j)
            if d < hw.min_pair_distance:
                violations.append(Violation("pair_distance", (i, j), d, hw.min_pair_distance))
    return ValidationReport(tuple(violations))


def ambiguity_warnings(graph: EmbeddedGraph, margin: float = 0.15) -> tuple[AmbiguityWarning, ...]:
    """Flag pairs whose distance sits within ``margin`` of the disk boundary.

    Non-edges at distance <= (1 + margin) * radius may spuriously blockade;
    edges at distance >= (1 - margin) * radius may fail to. With margin 0
    only pairs exactly at the radius are flagged.
    """
    if margin < 0:
        raise InvalidInput(f"margin must be nonnegative, got {margin!r}")
    lo = (1.0 - margin) * graph.radius
    hi = (1.0 + margin) * graph.radius
    out = []
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            d = graph.distance(i, j)
            if d <= graph.radius:
                if d >= lo:
                    out.append(AmbiguityWarning("edge_near_radius", (i, j), d, lo))
            elif d <= hi:
                out.append(AmbiguityWarning("nonedge_near_radius", (i, j), d, hi))
    return tuple(out)
