"""Sparse multivariate polynomials over a coefficient ring.

A :class:`MultiPoly` stores a sorted tuple of variable names and a dict
from exponent tuples to nonzero coefficients.  Variables are ordered
theta < t < t1 < t2 < ... < x < z < (anything else, by name), which fixes
the canonical serialization.  Unused variables are dropped, so two equal
polynomials always have identical (vars, terms).

The coefficient ring is one of :data:`ZZ`, ``Fq(ctx)`` (raw field values),
``A(ctx)`` (:class:`PolyA`) or ``K(ctx)`` (:class:`RatFun`).
"""

from __future__ import annotations

import functools
import re

from .errors import DomainError, UsageError
from .field import FieldCtx, FqElem, format_fq
from .poly import PolyA, RatFun

THETA = 'theta'
_ALIASES = {'θ': THETA}


def canon_var(name: str) -> str:
    return _ALIASES.get(name, name)


@functools.lru_cache(maxsize=None)
def var_rank(name: str):
    if name == THETA:
        return (0, '', 0)
    if name == 't':
        return (1, '', 0)
    m = re.fullmatch(r't_?(\d+)', name)
    if m:
        return (2, '', int(m.group(1)))
    if name == 'x':
        return (3, '', 0)
    if name == 'z':
        return (4, '', 0)
    m = re.fullmatch(r'([^\d]*)(\d*)', name)
    return (5, m.group(1), int(m.group(2)) if m.group(2) else -1)


def display_var(name: str) -> str:
    return 'θ' if name == THETA else name


# --- coefficient rings ------------------------------------------------------

class Ring:
    """Operations on the coefficient values stored in a MultiPoly."""

    name = 'ring'
    ctx = None
    characteristic = 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return not a

    def fmt(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = 'ZZ'

    def __init__(self):
        self.zero, self.one = 0, 1

    def from_int(self, n):
        return n

    def coerce(self, x):
        if isinstance(x, int):
            return x
        raise UsageError(f"cannot coerce {x!r} into ZZ")

    def div(self, a, b):
        raise DomainError("division in ZZ")


class FiniteFieldRing(Ring):
    """F_q with raw integer values."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.name = f'F_{ctx.q}'
        self.characteristic = ctx.p
        self.zero, self.one = 0, 1

    def add(self, a, b):
        return self.ctx.add(a, b)

    def sub(self, a, b):
        return self.ctx.sub(a, b)

    def neg(self, a):
        return self.ctx.neg(a)

    def mul(self, a, b):
        return self.ctx.mul(a, b)

    def div(self, a, b):
        return self.ctx.mul(a, self.ctx.inv(b))

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return self.ctx.from_int(n)

    def coerce(self, x):
        if isinstance(x, FqElem):
            self.ctx._check(x.ctx)
            return x.value
        if isinstance(x, int):
            return self.ctx.from_int(x)
        if isinstance(x, PolyA) and x.is_constant():
            return x.c[0] if x.c else 0
        raise UsageError(f"cannot coerce {x!r} into {self.name}")

    def frobenius(self, a, k):
        return a  # x^q = x on F_q

    def fmt(self, a):
        return format_fq(self.ctx, a)


class PolynomialRing(Ring):
    """A = F_q[theta]."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.name = f'F_{ctx.q}[θ]'
        self.characteristic = ctx.p
        self.zero, self.one = PolyA.zero(ctx), PolyA.one(ctx)

    def is_zero(self, a):
        return not a.c

    def from_int(self, n):
        return PolyA.const(self.ctx, self.ctx.from_int(n))

    def coerce(self, x):
        if isinstance(x, PolyA):
            self.ctx._check(x.ctx)
            return x
        if isinstance(x, RatFun):
            return x.to_poly()
        return PolyA.const(self.ctx, x if isinstance(x, FqElem) else self.ctx.from_int(x))

    def div(self, a, b):
        return a.exact_div(b)

    def frobenius(self, a, k):
        return a.twist(k)


class FractionField(Ring):
    """K = F_q(theta)."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.name = f'F_{ctx.q}(θ)'
        self.characteristic = ctx.p
        self.zero, self.one = RatFun.zero(ctx), RatFun.one(ctx)

    def is_zero(self, a):
        return not a.num.c

    def from_int(self, n):
        return RatFun.from_poly(PolyA.const(self.ctx, self.ctx.from_int(n)))

    def coerce(self, x):
        if isinstance(x, RatFun):
            self.ctx._check(x.ctx)
            return x
        if isinstance(x, PolyA):
            self.ctx._check(x.ctx)
            return RatFun.from_poly(x)
        return RatFun.from_poly(PolyA.const(self.ctx, x if isinstance(x, FqElem) else self.ctx.from_int(x)))

    def div(self, a, b):
        return a / b

    def frobenius(self, a, k):
        return a.twist(k)

    def fmt(self, a):
        return str(a)


ZZ = IntegerRing()


@functools.lru_cache(maxsize=None)
def Fq(ctx: FieldCtx) -> FiniteFieldRing:
    return FiniteFieldRing(ctx)


@functools.lru_cache(maxsize=None)
def A(ctx: FieldCtx) -> PolynomialRing:
    return PolynomialRing(ctx)


@functools.lru_cache(maxsize=None)
def K(ctx: FieldCtx) -> FractionField:
    return FractionField(ctx)


def convert(value, source: Ring, target: Ring):
    """Map a coefficient from one ring into another (F_q -> A -> K, ZZ -> any)."""
    if source is target:
        return value
    if isinstance(source, FiniteFieldRing):
        if isinstance(target, PolynomialRing):
            return PolyA.const(source.ctx, value)
        if isinstance(target, FractionField):
            return RatFun.from_poly(PolyA.const(source.ctx, value))
    if isinstance(source, IntegerRing):
        return target.from_int(value)
    return target.coerce(value)


# --- polynomials ------------------------------------------------------------

class MultiPoly:
    """An immutable sparse polynomial in named variables."""

    __slots__ = ('ring', 'vars', 'terms')

    def __init__(self, ring: Ring, vars=(), terms=None):
        vars = tuple(canon_var(v) for v in vars)
        terms = dict(terms or {})
        if len(set(vars)) != len(vars):
            raise UsageError(f"duplicate variables in {vars}")
        self.ring = ring
        self.vars, self.terms = _normalize(ring, vars, terms)

    @classmethod
    def _raw(cls, ring, vars, terms):
        obj = object.__new__(cls)
        obj.ring, obj.vars, obj.terms = ring, vars, terms
        return obj

    # --- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring):
        return cls._raw(ring, (), {})

    @classmethod
    def const(cls, ring, value):
        value = ring.coerce(value)
        if ring.is_zero(value):
            return cls.zero(ring)
        return cls._raw(ring, (), {(): value})

    @classmethod
    def var(cls, ring, name: str, power: int = 1, coeff=None):
        name = canon_var(name)
        c = ring.one if coeff is None else coeff
        if ring.is_zero(c):
            return cls.zero(ring)
        if power == 0:
            return cls._raw(ring, (), {(): c})
        return cls._raw(ring, (name,), {(power,): c})

    @classmethod
    def gens(cls, ring, *names):
        return tuple(cls.var(ring, n) for n in names)

    @classmethod
    def from_terms(cls, ring, items):
        """Build from an iterable of (monomial dict, coefficient)."""
        items = list(items)
        allv = sorted({canon_var(v) for mono, _ in items for v in mono}, key=var_rank)
        idx = {v: i for i, v in enumerate(allv)}
        terms = {}
        for mono, c in items:
            e = [0] * len(allv)
            for v, d in mono.items():
                e[idx[canon_var(v)]] += d
            e = tuple(e)
            c = ring.coerce(c)
            terms[e] = ring.add(terms[e], c) if e in terms else c
        return cls(ring, allv, terms)

    @classmethod
    def from_polya(cls, f: PolyA, var: str = THETA, ring: Ring | None = None) -> MultiPoly:
        """Embed a PolyA as a polynomial in ``var`` with F_q coefficients."""
        ring = ring or Fq(f.ctx)
        src = Fq(f.ctx)
        terms = {(n,): convert(c, src, ring) for n, c in enumerate(f.c) if c}
        return cls(ring, (canon_var(var),), terms)

    # --- structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self):
        """The coefficient of the empty monomial."""
        key = (0,) * len(self.vars)
        return self.terms.get(key, self.ring.zero)

    def degree(self, var: str) -> int:
        var = canon_var(var)
        if var not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def monomials(self):
        """Iterate (monomial dict, coefficient) in canonical order."""
        for e in sorted(self.terms):
            yield {v: d for v, d in zip(self.vars, e) if d}, self.terms[e]

    def coefficient(self, monomial=None, **kw):
        """Coefficient of a monomial given as a dict var -> exponent."""
        mono = dict(monomial or {})
        mono.update(kw)
        mono = {canon_var(v): d for v, d in mono.items() if d}
        for v in mono:
            if v not in self.vars:
                return self.ring.zero
        key = tuple(mono.get(v, 0) for v in self.vars)
        return self.terms.get(key, self.ring.zero)

    def coeff_of(self, var: str, n: int) -> MultiPoly:
        """Coefficient of var^n as a polynomial in the remaining variables."""
        var = canon_var(var)
        if var not in self.vars:
            return self if n == 0 else MultiPoly.zero(self.ring)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        terms = {e[:i] + e[i + 1:]: c for e, c in self.terms.items() if e[i] == n}
        return MultiPoly(self.ring, rest, terms)

    def as_univariate(self, var: str) -> dict:
        """Split into {exponent of var: coefficient polynomial}."""
        var = canon_var(var)
        if var not in self.vars:
            return {0: self} if self.terms else {}
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        groups = {}
        for e, c in self.terms.items():
            groups.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {n: MultiPoly(self.ring, rest, t) for n, t in groups.items()}

    # --- coercion and alignment ---------------------------------------------
    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring is not self.ring:
                if _ring_key(other.ring) != _ring_key(self.ring):
                    raise UsageError(f"mixed coefficient rings {self.ring} and {other.ring}")
            return other
        try:
            return MultiPoly.const(self.ring, other)
        except (UsageError, DomainError):
            return None

    def _aligned(self, other):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        allv = tuple(sorted(set(self.vars) | set(other.vars), key=var_rank))
        return allv, _embed(self.vars, self.terms, allv), _embed(other.vars, other.terms, allv)

    # --- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        vars, a, b = self._aligned(o)
        ring = self.ring
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = ring.add(out[e], c)
                if ring.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly._raw(ring, *_strip(vars, out))

    __radd__ = __add__

    def __neg__(self):
        ring = self.ring
        return MultiPoly._raw(ring, self.vars, {e: ring.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> MultiPoly:
        """Multiply every coefficient by a ring value c."""
        ring = self.ring
        if ring.is_zero(c):
            return MultiPoly.zero(ring)
        out = {}
        for e, v in self.terms.items():
            w = ring.mul(v, c)
            if not ring.is_zero(w):
                out[e] = w
        return MultiPoly._raw(ring, *_strip(self.vars, out))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        ring = self.ring
        if not self.terms or not o.terms:
            return MultiPoly.zero(ring)
        if not o.vars:
            return self.scale(o.terms[()])
        if not self.vars:
            return o.scale(self.terms[()])
        vars, a, b = self._aligned(o)
        out = {}
        mul, add = ring.mul, ring.add
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = mul(c1, c2)
                if e in out:
                    out[e] = add(out[e], v)
                else:
                    out[e] = v
        out = {e: c for e, c in out.items() if not ring.is_zero(c)}
        return MultiPoly._raw(ring, *_strip(vars, out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a MultiPoly")
        result = MultiPoly.const(self.ring, self.ring.one)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, c):
        """Divide by a scalar of the coefficient ring."""
        if isinstance(c, MultiPoly):
            if not c.is_constant():
                raise UsageError("only division by constants is supported")
            c = c.constant_value()
        else:
            c = self.ring.coerce(c)
        ring = self.ring
        return MultiPoly._raw(ring, self.vars, {e: ring.div(v, c) for e, v in self.terms.items()})

    # --- transformations ----------------------------------------------------
    def map_coeffs(self, fn, ring: Ring | None = None) -> MultiPoly:
        ring = ring or self.ring
        return MultiPoly(ring, self.vars, {e: fn(c) for e, c in self.terms.items()})

    def change_ring(self, ring: Ring) -> MultiPoly:
        src = self.ring
        return MultiPoly(ring, self.vars, {e: convert(c, src, ring) for e, c in self.terms.items()})

    def frobenius(self, k: int = 1, trunc=None) -> MultiPoly:
        """The q^k-th power, computed coefficient-wise (valid in characteristic p).

        ``trunc=(var, n)`` drops terms whose exponent of var would reach n
        before their coefficients are twisted.
        """
        ring = self.ring
        if not hasattr(ring, 'frobenius'):
            raise UsageError(f"Frobenius is not defined over {ring}")
        qk = ring.ctx.q ** k
        terms = self.terms
        if trunc is not None:
            var, n = canon_var(trunc[0]), trunc[1]
            if var in self.vars:
                i = self.vars.index(var)
                terms = {e: c for e, c in terms.items() if e[i] * qk < n}
            elif n <= 0:
                terms = {}
        if k == 0:
            return MultiPoly._raw(ring, *_strip(self.vars, dict(terms)))
        return MultiPoly._raw(ring, *_strip(self.vars, {tuple(d * qk for d in e): ring.frobenius(c, k)
                                                        for e, c in terms.items()}))

    def truncate(self, var: str, n: int) -> MultiPoly:
        """Drop every term whose exponent of var is >= n."""
        var = canon_var(var)
        if var not in self.vars:
            return self if n > 0 else MultiPoly.zero(self.ring)
        i = self.vars.index(var)
        return MultiPoly._raw(self.ring, *_strip(self.vars, {e: c for e, c in self.terms.items() if e[i] < n}))

    def rename(self, mapping) -> MultiPoly:
        mapping = {canon_var(k): canon_var(v) for k, v in mapping.items()}
        newv = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(newv)) != len(newv):
            return self.substitute({k: MultiPoly.var(self.ring, v) for k, v in mapping.items()})
        order = sorted(range(len(newv)), key=lambda i: var_rank(newv[i]))
        terms = {tuple(e[i] for i in order): c for e, c in self.terms.items()}
        return MultiPoly._raw(self.ring, tuple(newv[i] for i in order), terms)

    def substitute(self, mapping) -> MultiPoly:
        """Simultaneously replace variables by polynomials or scalars."""
        ring = self.ring
        subs = {}
        for k, v in mapping.items():
            k = canon_var(k)
            if k not in self.vars and not _known_var(k):
                raise UsageError(f"unknown variable {k!r}")
            subs[k] = v if isinstance(v, MultiPoly) else MultiPoly.const(ring, v)
        keep = [i for i, v in enumerate(self.vars) if v not in subs]
        repl = [(i, subs[v]) for i, v in enumerate(self.vars) if v in subs]
        keep_vars = tuple(self.vars[i] for i in keep)
        power_cache = {}

        def power(i, poly, d):
            key = (i, d)
            if key not in power_cache:
                power_cache[key] = poly ** d
            return power_cache[key]

        result = MultiPoly.zero(ring)
        grouped = {}
        for e, c in self.terms.items():
            rk = tuple(e[i] for i, _ in repl)
            grouped.setdefault(rk, {})[tuple(e[i] for i in keep)] = c
        for rk, part in grouped.items():
            piece = MultiPoly(ring, keep_vars, part)
            for (i, poly), d in zip(repl, rk):
                if d:
                    piece = piece * power(i, poly, d)
            result = result + piece
        return result

    def subs(self, var: str, value) -> MultiPoly:
        var = canon_var(var)
        if var not in self.vars and not _known_var(var):
            raise UsageError(f"unknown variable {var!r}")
        return self.substitute({var: value})

    def evaluate(self, assignment):
        """Substitute scalars for every variable and return the coefficient value."""
        assignment = {canon_var(k): v for k, v in assignment.items()}
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise UsageError(f"no value for variables {missing}")
        return self.substitute({v: assignment[v] for v in self.vars}).constant_value()

    # --- comparison and display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if _ring_key(self.ring) != _ring_key(other.ring):
                return False
            if self.vars != other.vars or self.terms.keys() != other.terms.keys():
                return False
            return all(self.terms[e] == other.terms[e] for e in self.terms)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly[{self.ring}]({self})"

    def __str__(self):
        if not self.terms:
            return '0'
        ring = self.ring
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = '*'.join(display_var(v) if d == 1 else f'{display_var(v)}^{d}'
                            for v, d in zip(self.vars, e) if d)
            cs = ring.fmt(c)
            simple = ' ' not in cs
            if not mono:
                parts.append(cs)
            elif cs in ('1', '-1'):
                parts.append(cs[:-1] + mono)
            else:
                parts.append(f'{cs}*{mono}' if simple else f'({cs})*{mono}')
        out = parts[0]
        for part in parts[1:]:
            out += f' - {part[1:]}' if part.startswith('-') else f' + {part}'
        return out

    def __reduce__(self):
        return (MultiPoly._raw, (self.ring, self.vars, self.terms))


def _ring_key(ring):
    return (type(ring), ring.ctx)


def _known_var(name):
    # the standard vocabulary theta, t, t_n, x, z is always addressable
    return var_rank(name)[0] < 5


def _embed(vars, terms, allv):
    pos = [allv.index(v) for v in vars]
    n = len(allv)
    out = {}
    for e, c in terms.items():
        f = [0] * n
        for p, d in zip(pos, e):
            f[p] = d
        out[tuple(f)] = c
    return out


def _strip(vars, terms):
    # drop variables that no longer occur
    if not vars:
        return vars, terms
    used = [any(e[i] for e in terms) for i in range(len(vars))]
    if all(used):
        return vars, terms
    idx = [i for i, u in enumerate(used) if u]
    return tuple(vars[i] for i in idx), {tuple(e[i] for i in idx): c for e, c in terms.items()}


def _normalize(ring, vars, terms):
    order = sorted(range(len(vars)), key=lambda i: var_rank(vars[i]))
    if order != list(range(len(vars))):
        vars = tuple(vars[i] for i in order)
        terms = {tuple(e[i] for i in order): c for e, c in terms.items()}
    terms = {tuple(e): c for e, c in terms.items() if not ring.is_zero(c)}
    for e in terms:
        if len(e) != len(vars) or any(d < 0 for d in e):
            raise UsageError(f"bad exponent vector {e} for variables {vars}")
    return _strip(vars, terms)
