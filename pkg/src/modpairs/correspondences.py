"""Pointwise admissibility tests for prime correspondences between curve pairs.

A correspondence between two curve pairs is described by one local record
per closed point of its normalization: the divisor multiplicities under the
two projections and the ramification degrees of the induced valuation-ring
extensions.  Three tests consume exactly this data:

  * level-one admissibility:       n_x * e_x >= n_y * e_y at every point;
  * admissibility after a twist:   n_x = 0 forces n_y = 0 at every point;
  * log admissibility:             n_x * e_x divides n_y * e_y at every point.

Finiteness and properness of the projections are assumed of the input and
never checked; so is completeness of the record list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pairs import PairMap, StructureError


@dataclass(frozen=True)
class CorrLocalRecord:
    """Local data at one closed point: divisor coefficients and ramification."""

    label: str
    n_x: int
    n_y: int
    e_x: int
    e_y: int

    def __post_init__(self):
        if self.n_x < 0 or self.n_y < 0:
            raise StructureError("divisor coefficients must be non-negative")
        if self.e_x < 1 or self.e_y < 1:
            raise StructureError("ramification degrees must be positive")


@dataclass(frozen=True)
class ConstantCorr:
    """Correspondence whose second projection is constant; only the image matters."""

    image_in_interior: bool


@dataclass(frozen=True)
class NonConstantCorr:
    """Complete record list, one entry per point where either coefficient is nonzero.

    Completeness is the caller's obligation; it cannot be verified from the
    records alone.
    """

    records: tuple[CorrLocalRecord, ...]

    def __post_init__(self):
        records = tuple(self.records)
        object.__setattr__(self, "records", records)
        labels = [r.label for r in records]
        if len(set(labels)) != len(labels):
            raise StructureError("record labels must be distinct")


CurveCorr = ConstantCorr | NonConstantCorr


def in_mcor(c: CurveCorr) -> bool:
    """Admissible at level one: every record satisfies n_x * e_x >= n_y * e_y."""
    if isinstance(c, ConstantCorr):
        return c.image_in_interior
    return all(r.n_x * r.e_x >= r.n_y * r.e_y for r in c.records)


def in_colim_mcor(c: CurveCorr) -> bool:
    """Admissible after some finite twist of the source: n_x = 0 forces n_y = 0."""
    if isinstance(c, ConstantCorr):
        return c.image_in_interior
    return all(r.n_y == 0 for r in c.records if r.n_x == 0)


def _divides(d: int, m: int) -> bool:
    # zero divides only zero; everything divides zero
    return m == 0 if d == 0 else m % d == 0


def in_lcor(c: CurveCorr) -> bool:
    """Log admissible: every record satisfies n_x * e_x | n_y * e_y.

    The convention at zero (0 divides only 0, everything divides 0) makes
    log admissibility imply twisted admissibility on the nose.
    """
    if isinstance(c, ConstantCorr):
        return c.image_in_interior
    return all(_divides(r.n_x * r.e_x, r.n_y * r.e_y) for r in c.records)


def corr_minimal_twist(c: CurveCorr) -> int | None:
    """Least ``n >= 1`` whose rescaling ``n_x -> n * n_x`` passes the level-one test.

    None when no rescaling works, i.e. some record has n_x = 0 with n_y > 0.
    A constant correspondence needs no rescaling when its image avoids the
    divisor, and no rescaling helps when it does not.
    """
    if isinstance(c, ConstantCorr):
        return 1 if c.image_in_interior else None
    need = 1
    for r in c.records:
        if r.n_y == 0:
            continue
        if r.n_x == 0:
            return None
        target = r.n_y * r.e_y
        step = r.n_x * r.e_x
        need = max(need, (target + step - 1) // step)
    return need


def from_monomial_param(a: int, b: int, n_x: int, n_y: int) -> NonConstantCorr:
    """Correspondence cut out by the curve ``t -> (t**a, t**b)`` between
    one-dimensional pairs with multiplicities ``n_x`` and ``n_y`` at the origin.

    The only closed point where either coefficient can be nonzero is the one
    over the origin, where the two projections ramify with degrees ``a`` and
    ``b``.  The exponents need not be coprime.
    """
    if a < 1 or b < 1:
        raise ValueError("parametrization exponents must be positive")
    return NonConstantCorr((CorrLocalRecord("0", n_x, n_y, a, b),))


def graph_corr(f: PairMap) -> CurveCorr:
    """Record set of the graph of a monomial map between curve pairs.

    The graph curve is the source itself, so the first projection never
    ramifies while the second ramifies with the monomial degree.  A
    degree-zero map is treated as constant at the divisor's base point, so
    its image stays in the interior only when the target modulus vanishes.
    """
    if f.src.chart.dim != 1 or f.dst.chart.dim != 1:
        raise StructureError("graph records are defined for one-dimensional charts only")
    m = f.map.expo[0][0]
    p = f.src.divisor.mults[0]
    q = f.dst.divisor.mults[0]
    if m == 0:
        return ConstantCorr(image_in_interior=(q == 0))
    return NonConstantCorr((CorrLocalRecord("0", p, q, 1, m),))
