"""Finite fields F_q, q = p^e.

Elements are stored as plain integers in ``range(q)``: the coordinate vector
``(c_0, ..., c_{e-1})`` of ``c_0 + c_1 u + ... + c_{e-1} u^{e-1}`` over F_p is
packed as ``c_0 + c_1 p + ... + c_{e-1} p^{e-1}``.  For a prime field the
packed value is the residue itself.  Polynomial containers hold these raw
integers; :class:`FqElem` is the user-facing wrapper.
"""

from __future__ import annotations

from .errors import DomainError, UsageError

# ascending coefficient tuples, monic
DEFAULT_MODULI = {
    4: (2, 2, (1, 1, 1)),        # u^2 + u + 1
    8: (2, 3, (1, 1, 0, 1)),     # u^3 + u + 1
    9: (3, 2, (2, 2, 1)),        # u^2 + 2u + 2
}

MAX_PRIME = 1 << 16
_TABLE_LIMIT = 1 << 16
_ADD_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomial helpers over F_p (lists, ascending) -------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _fp_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return a


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _fp_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod_x(n, m, p):
    """x^n mod m over F_p."""
    result, base = [1], [0, 1]
    base = _fp_mod(base, m, p)
    while n:
        if n & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        n >>= 1
    return result


def is_irreducible_fp(modulus, p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    Degrees up to 3 use the root test; higher degrees use Rabin's
    distinct-degree test.
    """
    m = list(modulus)
    e = len(m) - 1
    if e < 1:
        return False
    if e <= 3:
        for r in range(p):
            v = 0
            for c in reversed(m):
                v = (v * r + c) % p
            if v == 0:
                return False
        return True
    x = [0, 1]
    if _fp_sub(_fp_powmod_x(p ** e, m, p), x, p):
        return False
    for r in _prime_factors(e):
        h = _fp_sub(_fp_powmod_x(p ** (e // r), m, p), x, p)
        if len(_fp_gcd(m, h, p)) != 1:
            return False
    return True


class FieldCtx:
    """The field F_q with q = p^e, fixed by a monic irreducible modulus.

    Instances are immutable and hashable; two contexts compare equal when
    they have the same characteristic, degree and modulus.
    """

    __slots__ = ('p', 'e', 'q', 'modulus', '_add_t', '_exp', '_log', '_key')

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise UsageError(f"p={p} is not prime")
        if p > MAX_PRIME:
            raise UsageError(f"p={p} exceeds the supported bound 2^16")
        if e < 1:
            raise UsageError("extension degree e must be >= 1")
        q = p ** e
        if q >= 1 << 64:
            raise UsageError(f"q={p}^{e} does not fit in 64 bits")
        self.p, self.e, self.q = p, e, q
        if e == 1:
            self.modulus = None
        else:
            if modulus is None:
                if q not in DEFAULT_MODULI or DEFAULT_MODULI[q][:2] != (p, e):
                    raise UsageError(f"no built-in modulus for q={q}; supply one")
                modulus = DEFAULT_MODULI[q][2]
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise UsageError(f"modulus must be monic of degree {e}")
            if not is_irreducible_fp(modulus, p):
                raise UsageError(f"modulus {list(modulus)} is reducible over F_{p}")
            self.modulus = modulus
        self._key = (p, e, self.modulus)
        self._add_t = None
        self._exp = None
        self._log = None
        if e > 1:
            if q <= _ADD_TABLE_LIMIT:
                self._add_t = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
            if q <= _TABLE_LIMIT:
                self._build_log_tables()

    # --- identity -----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.e == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (FieldCtx, (self.p, self.e, self.modulus))

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    # --- coordinates --------------------------------------------------------
    def coords(self, a: int) -> tuple:
        p = self.p
        out = []
        for _ in range(self.e):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords) -> int:
        coords = list(coords)
        if len(coords) != self.e:
            raise UsageError(f"expected {self.e} coordinates, got {len(coords)}")
        v = 0
        for c in reversed(coords):
            if not 0 <= c < self.p:
                raise UsageError(f"coordinate {c} not in [0, {self.p})")
            v = v * self.p + c
        return v

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def gen(self) -> int:
        """The class of u (only meaningful for e > 1)."""
        if self.e == 1:
            raise UsageError("prime field has no generator u")
        return self.p

    # --- arithmetic on raw values -------------------------------------------
    def _add_digits(self, a, b):
        p, v, m = self.p, 0, 1
        while a or b:
            v += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return v

    def _mul_coords(self, a, b):
        prod = _fp_mul(list(self.coords(a)), list(self.coords(b)), self.p)
        r = _fp_mod(prod, self.modulus, self.p)
        r += [0] * (self.e - len(r))
        return self.from_coords(r)

    def _build_log_tables(self):
        q = self.q
        order = q - 1
        factors = _prime_factors(order) if order > 1 else []
        for g in range(1, q):
            if all(self._pow_slow(g, order // r) != 1 for r in factors):
                break
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_coords(x, g)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp, self._log = exp, log

    def _pow_slow(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self._mul_coords(r, a)
            a = self._mul_coords(a, a)
            n >>= 1
        return r

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self._add_t is not None:
            return self._add_t[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        p, v, m = self.p, 0, 1
        while a:
            v += (-(a % p) % p) * m
            a //= p
            m *= p
        return v

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_coords(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_slow(a, self.q - 2)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        if self.e == 1:
            return pow(a, n, self.p)
        n %= self.q - 1
        if self._exp is not None:
            return self._exp[self._log[a] * n % (self.q - 1)]
        return self._pow_slow(a, n)

    def frobenius(self, a: int) -> int:
        """x -> x^p."""
        return self.pow(a, self.p)

    def elem(self, value) -> FqElem:
        """Wrap a raw value, a coordinate sequence or an FqElem."""
        if isinstance(value, FqElem):
            self._check(value.ctx)
            return value
        if isinstance(value, int):
            # prime field: any integer; extension field: a packed raw value
            if self.e == 1:
                return FqElem(self, value % self.p)
            if not 0 <= value < self.q:
                raise UsageError(f"raw value {value} not in [0, {self.q})")
            return FqElem(self, value)
        return FqElem(self, self.from_coords(value))

    def _check(self, other):
        if other != self:
            raise UsageError(f"mixed field contexts: {self!r} vs {other!r}")


def GF(q: int, modulus=None) -> FieldCtx:
    """Field with q elements; prime powers 4, 8, 9 have built-in moduli."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise UsageError(f"q={q} is not a prime power")
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise UsageError(f"q={q} is not a prime power")
    return FieldCtx(p, e, modulus)


class FqElem:
    """An element of F_q bound to its :class:`FieldCtx`."""

    __slots__ = ('ctx', 'value')

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coords(self) -> tuple:
        return self.ctx.coords(self.value)

    def _other(self, b):
        if isinstance(b, FqElem):
            self.ctx._check(b.ctx)
            return b.value
        if isinstance(b, int):
            return self.ctx.from_int(b)
        return NotImplemented

    def __add__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FqElem(self.ctx, self.ctx.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FqElem(self.ctx, self.ctx.sub(self.value, b))

    def __rsub__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FqElem(self.ctx, self.ctx.sub(b, self.value))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FqElem(self.ctx, self.ctx.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FqElem(self.ctx, self.ctx.mul(self.value, self.ctx.inv(b)))

    def __rtruediv__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return FqElem(self.ctx, self.ctx.mul(b, self.ctx.inv(self.value)))

    def __pow__(self, n: int):
        return FqElem(self.ctx, self.ctx.pow(self.value, n))

    def inv(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.inv(self.value))

    def frobenius(self) -> FqElem:
        return FqElem(self.ctx, self.ctx.frobenius(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, b):
        if isinstance(b, FqElem):
            return self.ctx == b.ctx and self.value == b.value
        if isinstance(b, int):
            return self.value == self.ctx.from_int(b)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __repr__(self):
        return f"FqElem({format_fq(self.ctx, self.value)})"

    def __str__(self):
        return format_fq(self.ctx, self.value)


def format_fq(ctx: FieldCtx, a: int) -> str:
    """Render a raw value; extension-field elements as polynomials in u."""
    if ctx.e == 1:
        return str(a)
    parts = []
    for i, c in reversed(list(enumerate(ctx.coords(a)))):
        if c == 0:
            continue
        mono = '' if i == 0 else ('u' if i == 1 else f'u^{i}')
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f'{c}*{mono}')
    return '+'.join(parts) if parts else '0'
