"""Power series in z truncated modulo z^N, with MultiPoly coefficients."""

from __future__ import annotations

from .errors import UsageError
from .multipoly import MultiPoly, canon_var


class TruncSeries:
    """sum_{n < order} c_n z^n with each c_n a MultiPoly (typically over K in x)."""

    __slots__ = ('ring', 'var', 'order', 'coeffs')

    def __init__(self, ring, order: int, coeffs=None, var: str = 'z'):
        if order < 0:
            raise UsageError("truncation order must be >= 0")
        self.ring = ring
        self.var = canon_var(var)
        self.order = order
        self.coeffs = {n: c for n, c in (coeffs or {}).items() if n < order and not c.is_zero()}

    @classmethod
    def from_multipoly(cls, poly: MultiPoly, order: int, var: str = 'z') -> TruncSeries:
        parts = poly.as_univariate(var)
        return cls(poly.ring, order, parts, var)

    def to_multipoly(self) -> MultiPoly:
        out = MultiPoly.zero(self.ring)
        for n, c in self.coeffs.items():
            out = out + c * MultiPoly.var(self.ring, self.var, n)
        return out

    def coefficient(self, n: int) -> MultiPoly:
        return self.coeffs.get(n, MultiPoly.zero(self.ring))

    def constant_term(self) -> MultiPoly:
        return self.coefficient(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return None
        if other.order != self.order:
            raise UsageError(f"mismatched truncation orders {self.order} and {other.order}")
        if other.var != self.var:
            raise UsageError(f"mismatched series variables {self.var} and {other.var}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for n, c in o.coeffs.items():
            out[n] = out[n] + c if n in out else c
        return TruncSeries(self.ring, self.order, out, self.var)

    def __neg__(self):
        return TruncSeries(self.ring, self.order, {n: -c for n, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            out = {}
            for n1, c1 in self.coeffs.items():
                for n2, c2 in other.coeffs.items():
                    n = n1 + n2
                    if n < self.order:
                        out[n] = out[n] + c1 * c2 if n in out else c1 * c2
            return TruncSeries(self.ring, self.order, out, self.var)
        # scalar or MultiPoly free of the series variable
        return TruncSeries(self.ring, self.order, {n: c * other for n, c in self.coeffs.items()}, self.var)

    __rmul__ = __mul__

    def frobenius(self, k: int = 1) -> TruncSeries:
        """The q^k-th power, truncated."""
        qk = self.ring.ctx.q ** k
        out = {n * qk: c.frobenius(k) for n, c in self.coeffs.items() if n * qk < self.order}
        return TruncSeries(self.ring, self.order, out, self.var)

    def change_ring(self, ring) -> TruncSeries:
        return TruncSeries(ring, self.order, {n: c.change_ring(ring) for n, c in self.coeffs.items()}, self.var)

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.ring, min(order, self.order), self.coeffs, self.var)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.var == other.var and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncSeries({self.to_multipoly()} + O({self.var}^{self.order}))"
