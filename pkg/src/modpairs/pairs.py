"""Charts, divisors and monomial morphisms, with exact integer arithmetic.

A chart is an affine space with named coordinates.  A divisor on a chart
assigns a non-negative multiplicity to each coordinate hyperplane, and a
pair couples a chart with such a divisor; the pair's interior is the
complement of the divisor's support.  Morphisms are monomial: each target
coordinate pulls back to a single unit-coefficient monomial in the source
coordinates, recorded as a matrix of exponents.  Scalar coefficients are
dropped throughout since they change no vanishing order and no support.

Everything in this module is an immutable value or a pure function of its
inputs, so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass


class StructureError(ValueError):
    """Mismatched shapes: wrong divisor length, incompatible charts, bad entries."""


@dataclass(frozen=True)
class Chart:
    """Affine chart with named coordinates; dimension 0 is the point chart."""

    coords: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.coords, tuple):
            object.__setattr__(self, "coords", tuple(self.coords))
        for name in self.coords:
            if not isinstance(name, str) or not name:
                raise StructureError(f"coordinate names must be nonempty strings, got {name!r}")
        if len(set(self.coords)) != len(self.coords):
            raise StructureError(f"coordinate names must be distinct: {self.coords}")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def index(self, name: str) -> int:
        try:
            return self.coords.index(name)
        except ValueError:
            raise StructureError(f"chart has no coordinate {name!r}") from None


@dataclass(frozen=True)
class Divisor:
    """Non-negative multiplicity for each coordinate hyperplane of a chart."""

    mults: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.mults, tuple):
            object.__setattr__(self, "mults", tuple(self.mults))
        for m in self.mults:
            if not isinstance(m, int) or m < 0:
                raise StructureError(f"multiplicities must be non-negative integers, got {m!r}")

    def __len__(self) -> int:
        return len(self.mults)

    @property
    def support(self) -> frozenset[int]:
        """Indices of the hyperplanes that actually appear."""
        return frozenset(i for i, m in enumerate(self.mults) if m > 0)

    def is_zero(self) -> bool:
        return all(m == 0 for m in self.mults)

    def scaled(self, n: int) -> Divisor:
        return Divisor(tuple(n * m for m in self.mults))


@dataclass(frozen=True)
class Pair:
    """A chart together with an effective divisor bounding poles along it."""

    chart: Chart
    divisor: Divisor

    def __post_init__(self):
        if len(self.divisor) != self.chart.dim:
            raise StructureError(
                f"divisor has {len(self.divisor)} entries for a chart of dimension {self.chart.dim}"
            )


@dataclass(frozen=True)
class MonomialMap:
    """Exponent-matrix presentation of a monomial morphism of charts.

    Row ``j`` of ``expo`` records the monomial that target coordinate ``j``
    pulls back to: ``y_j = prod_i x_i ** expo[j][i]``, coefficient 1.
    """

    source: Chart
    target: Chart
    expo: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.expo)
        object.__setattr__(self, "expo", rows)
        if len(rows) != self.target.dim:
            raise StructureError(
                f"exponent matrix has {len(rows)} rows for a target of dimension {self.target.dim}"
            )
        for row in rows:
            if len(row) != self.source.dim:
                raise StructureError(
                    f"exponent row has {len(row)} entries for a source of dimension {self.source.dim}"
                )
            for e in row:
                if not isinstance(e, int) or e < 0:
                    raise StructureError(f"exponents must be non-negative integers, got {e!r}")

    @classmethod
    def identity(cls, chart: Chart) -> MonomialMap:
        d = chart.dim
        rows = tuple(tuple(1 if i == j else 0 for i in range(d)) for j in range(d))
        return cls(chart, chart, rows)


@dataclass(frozen=True)
class PairMap:
    """Candidate morphism of pairs; admissibility is queried, never assumed."""

    map: MonomialMap
    src: Pair
    dst: Pair

    def __post_init__(self):
        if self.src.chart != self.map.source:
            raise StructureError("source pair does not live on the map's source chart")
        if self.dst.chart != self.map.target:
            raise StructureError("destination pair does not live on the map's target chart")


def pullback(map: MonomialMap, divisor: Divisor) -> Divisor:
    """Pull a divisor on the target chart back along a monomial map.

    The multiplicity of the pullback along ``{x_i = 0}`` is the vanishing
    order there of the product of the pulled-back target equations, which
    for monomials is the transpose action of the exponent matrix:
    ``E_i = sum_j expo[j][i] * D_j``.
    """
    if len(divisor) != map.target.dim:
        raise StructureError(
            f"divisor has {len(divisor)} entries for a target of dimension {map.target.dim}"
        )
    mults = tuple(
        sum(map.expo[j][i] * divisor.mults[j] for j in range(map.target.dim))
        for i in range(map.source.dim)
    )
    return Divisor(mults)


def divisor_leq(a: Divisor, b: Divisor) -> bool:
    """True when ``a`` contains ``b`` as an effective divisor: a_i >= b_i for all i."""
    if len(a) != len(b):
        raise StructureError(f"cannot compare divisors of lengths {len(a)} and {len(b)}")
    return all(x >= y for x, y in zip(a.mults, b.mults))


def is_admissible(f: PairMap) -> bool:
    """True when the source divisor dominates the pulled-back target divisor."""
    return divisor_leq(f.src.divisor, pullback(f.map, f.dst.divisor))


def twist(p: Pair, n: int) -> Pair:
    """Multiply the divisor by ``n >= 1``, keeping the chart and the support."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"twist level must be a positive integer, got {n!r}")
    return Pair(p.chart, p.divisor.scaled(n))


def minimal_twist(f: PairMap) -> int | None:
    """Least ``n >= 1`` making ``twist(f.src, n) -> f.dst`` admissible, or None.

    None means no twist works: the pulled-back divisor touches a hyperplane
    the source divisor misses, and scaling the source cannot repair that.
    Whenever the support condition holds, the answer is the maximum of the
    ceilings ``E_i / x_i`` over the support of the pullback (at least 1).
    """
    pulled = pullback(f.map, f.dst.divisor)
    have = f.src.divisor
    if not pulled.support <= have.support:
        return None
    need = 1
    for e, x in zip(pulled.mults, have.mults):
        if e > 0:
            need = max(need, (e + x - 1) // x)  # x > 0 by the support check
    return need


def hom_log_exists(f: PairMap) -> bool:
    """Whether the map survives after some finite twist of the source.

    Maps that do are exactly the morphisms between the log charts the two
    pairs determine; two such morphisms agree there iff their monomial data
    coincide, so the underlying ``MonomialMap`` is a faithful presentation.
    """
    return pullback(f.map, f.dst.divisor).support <= f.src.divisor.support


def is_minimal(f: PairMap) -> bool:
    """True when the source divisor is exactly the pulled-back target divisor."""
    return f.src.divisor == pullback(f.map, f.dst.divisor)


def compose(g: MonomialMap, f: MonomialMap) -> MonomialMap:
    """Composite ``g after f`` by monomial substitution; exponent matrices multiply."""
    if f.target != g.source:
        raise StructureError("cannot compose: target of the first map differs from source of the second")
    rows = tuple(
        tuple(
            sum(g.expo[k][j] * f.expo[j][i] for j in range(f.target.dim))
            for i in range(f.source.dim)
        )
        for k in range(g.target.dim)
    )
    return MonomialMap(f.source, g.target, rows)


def format_divisor(chart: Chart, divisor: Divisor) -> str:
    """Render ``{coord: mult, ...}`` with zero entries omitted, declaration order."""
    if len(divisor) != chart.dim:
        raise StructureError("divisor does not match the chart")
    entries = [f"{name}: {m}" for name, m in zip(chart.coords, divisor.mults) if m > 0]
    return "{" + ", ".join(entries) + "}"
