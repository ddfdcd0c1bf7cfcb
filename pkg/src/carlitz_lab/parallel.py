"""Exact sums over A_{i+}, optionally split across worker processes.

Each term is a pair (numerator, denominator) with the numerator a PolyA or a
MultiPoly over A.  Workers receive contiguous slices of the enumeration and
return exact partial sums, which are added in slice order; since every value
is canonical the result does not depend on the worker count.
"""

from __future__ import annotations

import atexit
import concurrent.futures as cf
import functools
import itertools
import multiprocessing

from .config import current_cap, current_workers
from .multipoly import A, K, MultiPoly
from .poly import BLOCK, PolyA, RatFun, _monic_iter, monic_enumerate

_POOLS: dict = {}

# below this many terms the pool overhead outweighs the work
MIN_PARALLEL = 64


def _pool(n):
    pool = _POOLS.get(n)
    if pool is None:
        pool = cf.ProcessPoolExecutor(max_workers=n, mp_context=multiprocessing.get_context('fork'))
        _POOLS[n] = pool
    return pool


@atexit.register
def _shutdown():
    for pool in _POOLS.values():
        pool.shutdown(cancel_futures=True)
    _POOLS.clear()


class _Accumulator:
    """Running sum of fractions over a common denominator, reduced per block."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.total = None
        self.num, self.den, self.count = None, PolyA.one(ctx), 0

    def add(self, n, d):
        if not n:
            return
        if self.num is None:
            self.num = n
            self.den = d
        elif d == self.den:
            self.num = self.num + n
        else:
            self.num, self.den = self.num * d + n * self.den, self.den * d
        self.count += 1
        if self.count == BLOCK:
            self._flush()

    def _flush(self):
        if self.num is None:
            return
        part = _as_fraction(self.num, self.den)
        self.total = part if self.total is None else self.total + part
        self.num, self.den, self.count = None, PolyA.one(self.ctx), 0

    def result(self):
        self._flush()
        return self.total


def _as_fraction(num, den):
    if isinstance(num, PolyA):
        return RatFun(num, den)
    ring = K(den.ctx)
    return num.map_coeffs(lambda c: RatFun(c, den), ring)


def _zero_like(ctx, kind):
    return RatFun.zero(ctx) if kind == 'scalar' else MultiPoly.zero(K(ctx))


def _add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a + b


def _sum_slice(term, ctx, i, start, stop):
    acc = _Accumulator(ctx)
    for a in itertools.islice(_monic_iter(ctx, i), start, stop):
        acc.add(*term(a))
    return acc.result()


def sum_over_monic(ctx, i: int, term, kind: str = 'scalar', cap=None):
    """Sum term(a) = (numerator, denominator) over the monic a of degree i.

    ``kind`` is 'scalar' for PolyA numerators (result RatFun) or 'poly' for
    MultiPoly-over-A numerators (result MultiPoly over K).  ``term`` must be
    picklable (a module-level function or a functools.partial of one).
    """
    cap = current_cap() if cap is None else cap
    monic_enumerate(ctx, i, cap)  # raises ResourceError when over the cap
    count = ctx.q ** i
    workers = current_workers()
    if workers <= 1 or count < MIN_PARALLEL:
        total = _sum_slice(term, ctx, i, 0, count)
    else:
        step = -(-count // workers)
        bounds = [(s, min(s + step, count)) for s in range(0, count, step)]
        job = functools.partial(_sum_slice, term, ctx, i)
        parts = list(_pool(workers).map(job, *zip(*bounds)))
        total = None
        for part in parts:
            total = _add(total, part)
    if total is None:
        return _zero_like(ctx, kind)
    if kind == 'poly' and not isinstance(total, MultiPoly):
        return MultiPoly.const(K(ctx), total)
    return total


def lift_to_a(f: PolyA, var: str) -> MultiPoly:
    """a(var) as a polynomial over A with constant coefficients."""
    return MultiPoly.from_polya(f, var, A(f.ctx))
