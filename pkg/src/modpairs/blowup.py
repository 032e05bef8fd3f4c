"""Blowups of a pair at a coordinate-subspace center, one affine chart at a time.

The center is cut out by a set of coordinates.  Centers meeting the divisor
support give honest blowups; centers contained in the support satisfy the
stronger condition and are reported as modifications; centers missing the
support are invalid.  Charts are emitted individually with monomial maps
back to the original chart (no gluing data): every criterion downstream is
chart-local, so nothing more is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .pairs import Divisor, MonomialMap, Pair, StructureError, pullback


class BlowupClass(Enum):
    """How a center sits relative to the divisor support."""

    SMOOTH_BLOWUP = "smooth-blowup"  # meets the support but is not inside it
    MODIFICATION = "modification"    # contained in the support (the stronger condition)
    INVALID = "invalid"              # misses the support entirely


class InvalidBlowupError(ValueError):
    """Center disjoint from the divisor support; no charts can be produced."""

    def __init__(self, message: str, verdict: BlowupClass):
        super().__init__(message)
        self.verdict = verdict


@dataclass(frozen=True)
class BlowupSpec:
    """A pair plus the coordinate indices (0-based) cutting out the center.

    Validity of the center against the divisor support is decided by
    ``classify``, not at construction.
    """

    pair: Pair
    center: frozenset[int]

    def __post_init__(self):
        center = frozenset(self.center)
        object.__setattr__(self, "center", center)
        if not center:
            raise StructureError("blowup center must name at least one coordinate")
        for i in center:
            if not isinstance(i, int) or not 0 <= i < self.pair.chart.dim:
                raise StructureError(
                    f"center index {i!r} out of range for a chart of dimension {self.pair.chart.dim}"
                )


@dataclass(frozen=True)
class BlowupChart:
    """Affine chart of the blowup in which coordinate ``index`` is exceptional."""

    index: int
    chart_map: MonomialMap
    total_transform: Divisor


def classify(spec: BlowupSpec) -> BlowupClass:
    """Coordinate test on the center; containment in the support wins over contact."""
    support = spec.pair.divisor.support
    if not spec.center & support:
        return BlowupClass.INVALID
    if spec.center <= support:
        return BlowupClass.MODIFICATION
    return BlowupClass.SMOOTH_BLOWUP


def blowup_charts(spec: BlowupSpec) -> tuple[BlowupChart, ...]:
    """One chart per center coordinate, with the divisor's total transform.

    In the chart where coordinate ``j`` is exceptional the original
    coordinates substitute as ``y_j = x_j``, ``y_b = x_j * x_b`` for the
    other center coordinates ``b``, and ``y_i = x_i`` elsewhere.  The new
    chart reuses the coordinate names of the original chart.  A singleton
    center yields the identity chart (blowing up a hyperplane changes
    nothing).
    """
    verdict = classify(spec)
    if verdict is BlowupClass.INVALID:
        raise InvalidBlowupError("blowup center misses the divisor support", verdict)
    chart = spec.pair.chart
    d = chart.dim
    out = []
    for j in sorted(spec.center):
        rows = []
        for r in range(d):
            row = [0] * d
            row[r] = 1
            if r in spec.center and r != j:
                row[j] += 1
            rows.append(tuple(row))
        chart_map = MonomialMap(chart, chart, tuple(rows))
        out.append(BlowupChart(j, chart_map, pullback(chart_map, spec.pair.divisor)))
    return tuple(out)
