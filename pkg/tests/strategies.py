"""Hypothesis strategies for charts, divisors, maps, correspondences and levels."""

import hypothesis.strategies as st

from modpairs.blowup import BlowupSpec
from modpairs.correspondences import ConstantCorr, CorrLocalRecord, NonConstantCorr
from modpairs.pairs import Chart, Divisor, MonomialMap, Pair, PairMap
from modpairs.qdivisors import QPair

_NAME_POOL = tuple("abcdstuvwxyz")


@st.composite
def charts(draw, min_dim=0, max_dim=4):
    dim = draw(st.integers(min_dim, max_dim))
    names = draw(
        st.lists(st.sampled_from(_NAME_POOL), min_size=dim, max_size=dim, unique=True)
    )
    return Chart(tuple(names))


@st.composite
def divisors(draw, chart, max_mult=10):
    mults = draw(
        st.lists(st.integers(0, max_mult), min_size=chart.dim, max_size=chart.dim)
    )
    return Divisor(tuple(mults))


@st.composite
def pairs(draw, min_dim=0, max_dim=4, max_mult=10):
    chart = draw(charts(min_dim, max_dim))
    return Pair(chart, draw(divisors(chart, max_mult)))


@st.composite
def monomial_maps(draw, source=None, target=None, max_dim=4, max_expo=5):
    if source is None:
        source = draw(charts(0, max_dim))
    if target is None:
        target = draw(charts(0, max_dim))
    rows = tuple(
        tuple(draw(st.integers(0, max_expo)) for _ in range(source.dim))
        for _ in range(target.dim)
    )
    return MonomialMap(source, target, rows)


@st.composite
def pair_maps(draw, min_dim=0, max_dim=4, max_expo=5, max_mult=10):
    src = draw(pairs(min_dim, max_dim, max_mult))
    dst = draw(pairs(min_dim, max_dim, max_mult))
    m = draw(monomial_maps(source=src.chart, target=dst.chart, max_expo=max_expo))
    return PairMap(m, src, dst)


@st.composite
def composable_triples(draw, max_dim=3, max_expo=4):
    a = draw(charts(0, max_dim))
    b = draw(charts(0, max_dim))
    c = draw(charts(0, max_dim))
    d = draw(charts(0, max_dim))
    f = draw(monomial_maps(source=a, target=b, max_expo=max_expo))
    g = draw(monomial_maps(source=b, target=c, max_expo=max_expo))
    h = draw(monomial_maps(source=c, target=d, max_expo=max_expo))
    return f, g, h


@st.composite
def composable_pair_maps(draw, max_dim=3, max_expo=4, max_mult=8):
    x = draw(pairs(0, max_dim, max_mult))
    y = draw(pairs(0, max_dim, max_mult))
    z = draw(pairs(0, max_dim, max_mult))
    f = PairMap(draw(monomial_maps(source=x.chart, target=y.chart, max_expo=max_expo)), x, y)
    g = PairMap(draw(monomial_maps(source=y.chart, target=z.chart, max_expo=max_expo)), y, z)
    return f, g


@st.composite
def corr_records(draw, max_value=50):
    return CorrLocalRecord(
        label=draw(st.text("wxyz0123456789", min_size=1, max_size=4)),
        n_x=draw(st.integers(0, max_value)),
        n_y=draw(st.integers(0, max_value)),
        e_x=draw(st.integers(1, max_value)),
        e_y=draw(st.integers(1, max_value)),
    )


@st.composite
def curve_corrs(draw, max_records=6, max_value=50, allow_constant=True):
    if allow_constant and draw(st.booleans()) and draw(st.integers(0, 4)) == 0:
        return ConstantCorr(draw(st.booleans()))
    records = draw(
        st.lists(
            corr_records(max_value),
            max_size=max_records,
            unique_by=lambda r: r.label,
        )
    )
    return NonConstantCorr(tuple(records))


@st.composite
def qpairs(draw, max_level=12, max_dim=4, max_mult=12):
    level = draw(st.integers(1, max_level))
    return QPair(level, draw(pairs(0, max_dim, max_mult)))


@st.composite
def blowup_specs(draw, max_dim=5, max_mult=6):
    pair = draw(pairs(1, max_dim, max_mult))
    size = draw(st.integers(1, pair.chart.dim))
    center = draw(
        st.lists(
            st.integers(0, pair.chart.dim - 1),
            min_size=size,
            max_size=size,
            unique=True,
        )
    )
    return BlowupSpec(pair, frozenset(center))
