import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from carlitz_lab import GF, PolyA

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELD_SIZES = (2, 3, 4, 5, 7, 8, 9)


@pytest.fixture(params=(2, 3, 4, 5), ids=lambda q: f"q{q}")
def small_field(request):
    return GF(request.param)


fields = st.sampled_from(FIELD_SIZES).map(GF)


def polys(ctx, max_deg=8, nonzero=False):
    coeffs = st.lists(st.integers(0, ctx.q - 1), min_size=1 if nonzero else 0, max_size=max_deg + 1)
    out = coeffs.map(lambda cs: PolyA(ctx, [ctx.elem(c) for c in cs]))
    return out.filter(bool) if nonzero else out


def monic_polys(ctx, max_deg=6):
    return st.lists(st.integers(0, ctx.q - 1), max_size=max_deg).map(
        lambda cs: PolyA(ctx, [ctx.elem(c) for c in cs] + [ctx.elem(1)]))


@st.composite
def field_and_polys(draw, n=2, max_deg=8, nonzero=False, sizes=FIELD_SIZES):
    ctx = GF(draw(st.sampled_from(sizes)))
    return (ctx, *[draw(polys(ctx, max_deg, nonzero)) for _ in range(n)])
