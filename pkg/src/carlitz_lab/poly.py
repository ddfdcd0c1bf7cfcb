"""The polynomial ring A = F_q[theta] and its fraction field K = F_q(theta).

:class:`PolyA` is a dense, immutable coefficient tuple (raw field values,
ascending degree, no trailing zeros).  :class:`RatFun` is a reduced fraction
with monic denominator, so equality is component-wise.
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

from .config import current_cap
from .errors import DomainError, ResourceError, UsageError
from .field import FieldCtx, FqElem, format_fq

NEG_INF = -math.inf
_KRONECKER_MIN = 24


def _trim(c: list) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _pack(c, nb):
    rows = np.asarray(c, dtype='<u8').view(np.uint8).reshape(-1, 8)[:, :nb]
    return int.from_bytes(rows.tobytes(), 'little')


def _kron_mul(a, b, p):
    # Kronecker substitution: pack into big integers, multiply once, unpack.
    bound = (p - 1) ** 2 * min(len(a), len(b))
    nb = (bound.bit_length() + 7) // 8
    if nb > 8:
        return None
    n = len(a) + len(b) - 1
    raw = (_pack(a, nb) * _pack(b, nb)).to_bytes(n * nb, 'little')
    rows = np.zeros((n, 8), dtype=np.uint8)
    rows[:, :nb] = np.frombuffer(raw, dtype=np.uint8).reshape(n, nb)
    return (rows.view('<u8').ravel() % p).tolist()


def _sparse_mul(nza, nzb, n, ctx):
    out = [0] * n
    if ctx.e == 1:
        p = ctx.p
        for i, x in nza:
            for j, y in nzb:
                out[i + j] += x * y
        return [v % p for v in out]
    mul, add = ctx.mul, ctx.add
    for i, x in nza:
        for j, y in nzb:
            out[i + j] = add(out[i + j], mul(x, y))
    return out


class PolyA:
    """A polynomial in theta over F_q."""

    __slots__ = ('ctx', 'c')

    def __init__(self, ctx: FieldCtx, coeffs=()):
        self.ctx = ctx
        vals = []
        for x in coeffs:
            if isinstance(x, FqElem):
                ctx._check(x.ctx)
                vals.append(x.value)
            elif ctx.e == 1:
                vals.append(x % ctx.p)
            else:
                if not 0 <= x < ctx.q:
                    raise UsageError(f"raw value {x} not in [0, {ctx.q})")
                vals.append(x)
        self.c = _trim(vals)

    @classmethod
    def _raw(cls, ctx, c: tuple) -> PolyA:
        # c must already be trimmed raw values
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.c = c
        return obj

    # --- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ctx):
        return cls._raw(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls._raw(ctx, (1,))

    @classmethod
    def theta(cls, ctx):
        return cls._raw(ctx, (0, 1))

    @classmethod
    def monomial(cls, ctx, n: int, coeff: int = 1):
        if coeff == 0:
            return cls.zero(ctx)
        return cls._raw(ctx, (0,) * n + (coeff,))

    @classmethod
    def const(cls, ctx, value):
        if isinstance(value, FqElem):
            value = value.value
        elif ctx.e == 1:
            value %= ctx.p
        return cls._raw(ctx, (value,) if value else ())

    # --- basic properties ---------------------------------------------------
    @property
    def degree(self):
        """Degree, with -inf for the zero polynomial."""
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def coeffs(self) -> tuple:
        return self.c

    def coefficient(self, n: int) -> FqElem:
        return FqElem(self.ctx, self.c[n] if 0 <= n < len(self.c) else 0)

    @property
    def leading(self) -> int:
        return self.c[-1] if self.c else 0

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == 1

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    # --- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, PolyA):
            self.ctx._check(other.ctx)
            return other
        if isinstance(other, int):
            return PolyA.const(self.ctx, self.ctx.from_int(other))
        if isinstance(other, FqElem):
            self.ctx._check(other.ctx)
            return PolyA.const(self.ctx, other.value)
        return None

    # --- ring operations ----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        ctx = self.ctx
        if ctx.e == 1:
            p = ctx.p
            out = [(x + y) % p for x, y in zip(a, b)]
        else:
            add = ctx.add
            out = [add(x, y) for x, y in zip(a, b)]
        out.extend(a[len(b):])
        return PolyA._raw(ctx, _trim(out))

    __radd__ = __add__

    def __neg__(self):
        ctx = self.ctx
        if ctx.e == 1:
            p = ctx.p
            return PolyA._raw(ctx, tuple(-x % p for x in self.c))
        return PolyA._raw(ctx, tuple(ctx.neg(x) for x in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, s: int) -> PolyA:
        """Multiply by a raw field value."""
        ctx = self.ctx
        if s == 0:
            return PolyA.zero(ctx)
        if s == 1:
            return self
        if ctx.e == 1:
            p = ctx.p
            return PolyA._raw(ctx, tuple(x * s % p for x in self.c))
        mul = ctx.mul
        return PolyA._raw(ctx, tuple(mul(x, s) for x in self.c))

    def shift(self, n: int) -> PolyA:
        """Multiply by theta^n."""
        if not self.c or n == 0:
            return self
        return PolyA._raw(self.ctx, (0,) * n + self.c)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        ctx = self.ctx
        if not a or not b:
            return PolyA.zero(ctx)
        if len(a) == 1:
            return o.scale(a[0])
        if len(b) == 1:
            return self.scale(b[0])
        nza = [(i, x) for i, x in enumerate(a) if x]
        nzb = [(j, y) for j, y in enumerate(b) if y]
        if len(nza) * len(nzb) <= 2 * (len(a) + len(b)):
            # sparse operands (typical after twisting): touch only nonzero terms
            return PolyA._raw(ctx, _trim(_sparse_mul(nza, nzb, len(a) + len(b) - 1, ctx)))
        if ctx.e == 1:
            p = ctx.p
            if min(len(a), len(b)) >= _KRONECKER_MIN:
                prod = _kron_mul(a, b, p)
                if prod is not None:
                    return PolyA._raw(ctx, _trim(prod))
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return PolyA._raw(ctx, _trim([v % p for v in out]))
        mul, add = ctx.mul, ctx.add
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return PolyA._raw(ctx, _trim(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial; use RatFun")
        result = PolyA.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.c:
            raise DomainError("division by the zero polynomial")
        ctx = self.ctx
        rem = list(self.c)
        db = len(o.c) - 1
        if len(rem) - 1 < db:
            return PolyA.zero(ctx), self
        inv_lead = ctx.inv(o.c[-1])
        quot = [0] * (len(rem) - db)
        b = o.c
        if ctx.e == 1:
            p = ctx.p
            for k in range(len(rem) - 1, db - 1, -1):
                coef = rem[k] * inv_lead % p
                if coef:
                    s = k - db
                    quot[s] = coef
                    for i, y in enumerate(b):
                        if y:
                            rem[s + i] = (rem[s + i] - coef * y) % p
        else:
            mul, sub = ctx.mul, ctx.sub
            for k in range(len(rem) - 1, db - 1, -1):
                coef = mul(rem[k], inv_lead)
                if coef:
                    s = k - db
                    quot[s] = coef
                    for i, y in enumerate(b):
                        if y:
                            rem[s + i] = sub(rem[s + i], mul(coef, y))
        return PolyA._raw(ctx, _trim(quot)), PolyA._raw(ctx, _trim(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        return RatFun(self, other)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFun(o, self)

    def exact_div(self, other) -> PolyA:
        q, r = divmod(self, other)
        if r:
            raise DomainError("polynomial division is not exact")
        return q

    def monic(self) -> PolyA:
        if not self.c:
            return self
        return self.scale(self.ctx.inv(self.c[-1]))

    # --- evaluation and substitution ----------------------------------------
    def __call__(self, x):
        """Evaluate at a field element (raw int or FqElem) or compose with a PolyA."""
        ctx = self.ctx
        if isinstance(x, PolyA):
            out = PolyA.zero(ctx)
            for c in reversed(self.c):
                out = out * x + PolyA.const(ctx, c)
            return out
        if isinstance(x, FqElem):
            ctx._check(x.ctx)
            x = x.value
        v = 0
        for c in reversed(self.c):
            v = ctx.add(ctx.mul(v, x), c)
        return FqElem(ctx, v)

    def twist(self, k: int) -> PolyA:
        """theta -> theta^(q^k); equals self^(q^k) since F_q is fixed by Frobenius."""
        if k == 0 or len(self.c) <= 1:
            return self
        step = self.ctx.q ** k
        out = [0] * ((len(self.c) - 1) * step + 1)
        for n, x in enumerate(self.c):
            out[n * step] = x
        return PolyA._raw(self.ctx, tuple(out))

    # --- comparison and display ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, PolyA):
            return self.ctx == other.ctx and self.c == other.c
        if isinstance(other, (int, FqElem)):
            o = self._coerce(other)
            return self.c == o.c
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.c))

    def __repr__(self):
        return f"PolyA({self})"

    def __str__(self):
        return format_poly(self.ctx, self.c, 'θ')

    def __reduce__(self):
        return (PolyA._raw, (self.ctx, self.c))


def format_poly(ctx: FieldCtx, c, var: str = 'θ') -> str:
    if not c:
        return '0'
    parts = []
    for n in range(len(c) - 1, -1, -1):
        x = c[n]
        if x == 0:
            continue
        mono = '' if n == 0 else (var if n == 1 else f'{var}^{n}')
        coef = format_fq(ctx, x)
        if ctx.e > 1 and '+' in coef:
            coef = f'({coef})'
        if not mono:
            parts.append(coef)
        elif coef == '1':
            parts.append(mono)
        else:
            parts.append(f'{coef}*{mono}')
    return ' + '.join(parts)


def poly_gcd(f: PolyA, g: PolyA) -> PolyA:
    """Monic gcd (zero only when both inputs are zero)."""
    a, b = f, g
    while b.c:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(f: PolyA, g: PolyA):
    """Return (d, s, t) with d = s f + t g monic."""
    ctx = f.ctx
    r0, r1 = f, g
    s0, s1 = PolyA.one(ctx), PolyA.zero(ctx)
    t0, t1 = PolyA.zero(ctx), PolyA.one(ctx)
    while r1.c:
        qt, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    if not r0.c:
        return r0, s0, t0
    inv = ctx.inv(r0.leading)
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def frobenius_twist(f: PolyA, k: int) -> PolyA:
    if k < 0:
        raise UsageError("twist exponent must be >= 0")
    return f.twist(k)


# --- the sequences [i], D_i, L_i -------------------------------------------

@functools.lru_cache(maxsize=None)
def theta_bracket(ctx: FieldCtx, i: int) -> PolyA:
    """[i] = theta^(q^i) - theta (zero for i = 0)."""
    if i < 0:
        raise UsageError("index must be >= 0")
    return PolyA.monomial(ctx, ctx.q ** i) - PolyA.theta(ctx)


@functools.lru_cache(maxsize=None)
def carlitz_factorial(ctx: FieldCtx, i: int) -> PolyA:
    """D_i = [i] D_{i-1}^q, D_0 = 1."""
    if i < 0:
        raise UsageError("index must be >= 0")
    if i == 0:
        return PolyA.one(ctx)
    return theta_bracket(ctx, i) * carlitz_factorial(ctx, i - 1).twist(1)


@functools.lru_cache(maxsize=None)
def carlitz_lcm(ctx: FieldCtx, i: int) -> PolyA:
    """L_i = -[i] L_{i-1}, L_0 = 1."""
    if i < 0:
        raise UsageError("index must be >= 0")
    if i == 0:
        return PolyA.one(ctx)
    return -(theta_bracket(ctx, i) * carlitz_lcm(ctx, i - 1))


def special_polys(ctx: FieldCtx, i: int):
    """Return ([i], D_i, L_i)."""
    return theta_bracket(ctx, i), carlitz_factorial(ctx, i), carlitz_lcm(ctx, i)


def monic_enumerate(ctx: FieldCtx, i: int, cap=None):
    """Yield the q^i monic polynomials of degree i.

    Order is lexicographic in (c_{i-1}, ..., c_0).  Raises ResourceError
    before yielding anything if q^i exceeds the cap.
    """
    if i < 0:
        raise UsageError("degree must be >= 0")
    cap = current_cap() if cap is None else cap
    if ctx.q ** i > cap:
        raise ResourceError(
            f"enumerating A_{i}+ needs q^i = {ctx.q}^{i} = {ctx.q ** i} elements, "
            f"over the enumeration cap {cap}", cap=cap)
    return _monic_iter(ctx, i)


def _monic_iter(ctx, i):
    for digits in itertools.product(range(ctx.q), repeat=i):
        yield PolyA._raw(ctx, tuple(reversed(digits)) + (1,))


# --- the fraction field K ---------------------------------------------------

class RatFun:
    """A reduced fraction num/den in K with den monic."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=None, *, reduced=False):
        if isinstance(num, RatFun) and den is None:
            self.num, self.den = num.num, num.den
            return
        if not isinstance(num, PolyA):
            if not isinstance(den, PolyA):
                raise UsageError("RatFun needs at least one PolyA to fix the field")
            num = den._coerce(num)
        ctx = num.ctx
        if den is None:
            den = PolyA.one(ctx)
        elif not isinstance(den, PolyA):
            den = num._coerce(den)
        else:
            ctx._check(den.ctx)
        if not den.c:
            raise DomainError("zero denominator")
        if not reduced:
            if not num.c:
                den = PolyA.one(ctx)
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num, den = num.exact_div(g), den.exact_div(g)
        lead = den.c[-1]
        if lead != 1:
            inv = ctx.inv(lead)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, f: PolyA) -> RatFun:
        return cls(f, PolyA.one(f.ctx), reduced=True)

    @classmethod
    def zero(cls, ctx):
        return cls(PolyA.zero(ctx), PolyA.one(ctx), reduced=True)

    @classmethod
    def one(cls, ctx):
        return cls(PolyA.one(ctx), PolyA.one(ctx), reduced=True)

    @property
    def ctx(self):
        return self.num.ctx

    def is_zero(self) -> bool:
        return not self.num.c

    def __bool__(self):
        return bool(self.num.c)

    def is_integral(self) -> bool:
        return self.den.is_one()

    def to_poly(self) -> PolyA:
        if not self.den.is_one():
            raise DomainError(f"{self} is not in A")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RatFun):
            self.ctx._check(other.ctx)
            return other
        if isinstance(other, (int, FqElem, PolyA)):
            return RatFun.from_poly(self.num._coerce(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        g = poly_gcd(self.den, o.den)
        if g.is_one():
            return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RatFun(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num.c or not o.num.c:
            return RatFun.zero(self.ctx)
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        num = self.num.exact_div(g1) * o.num.exact_div(g2)
        den = self.den.exact_div(g2) * o.den.exact_div(g1)
        return RatFun(num, den, reduced=True)

    __rmul__ = __mul__

    def inv(self) -> RatFun:
        if not self.num.c:
            raise DomainError("inverse of zero in K")
        return RatFun(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        return RatFun(self.num ** n, self.den ** n, reduced=True)

    def twist(self, k: int) -> RatFun:
        """The q^k-th power, computed as theta -> theta^(q^k) on both parts."""
        return RatFun(self.num.twist(k), self.den.twist(k), reduced=True)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, FqElem, PolyA)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"{_group(str(self.num))}/{_group(str(self.den))}"

    def __reduce__(self):
        return (RatFun, (self.num, self.den), None)


def _group(s: str) -> str:
    return f"({s})" if ' ' in s else s


BLOCK = 64


def sum_fractions(ctx: FieldCtx, terms) -> RatFun:
    """Exact sum of (numerator, denominator) PolyA pairs.

    Terms are combined over a running common denominator without gcd work,
    and the partial sum is reduced once per block of ``BLOCK`` terms.
    """
    total = RatFun.zero(ctx)
    num, den = PolyA.zero(ctx), PolyA.one(ctx)
    count = 0
    for n, d in terms:
        if not n.c:
            continue
        if d == den:
            num = num + n
        else:
            num, den = num * d + n * den, den * d
        count += 1
        if count == BLOCK:
            total = total + RatFun(num, den)
            num, den = PolyA.zero(ctx), PolyA.one(ctx)
            count = 0
    if count:
        total = total + RatFun(num, den)
    return total
