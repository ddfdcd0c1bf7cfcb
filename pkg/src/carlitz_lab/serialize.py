"""JSON-ready encodings of the algebraic types, and their inverses."""

from __future__ import annotations

import json

from .errors import UsageError
from .field import FieldCtx, FqElem
from .multipoly import (A, FiniteFieldRing, FractionField, IntegerRing, K, MultiPoly,
                        PolynomialRing, ZZ, Fq, canon_var)
from .poly import PolyA, RatFun
from .series import TruncSeries


def field_to_json(ctx: FieldCtx) -> dict:
    out = {"p": ctx.p, "e": ctx.e}
    if ctx.e > 1:
        out["modulus"] = list(ctx.modulus)
    return out


def field_from_json(data: dict) -> FieldCtx:
    return FieldCtx(data["p"], data.get("e", 1), data.get("modulus"))


def _fq(ctx, raw: int) -> list:
    return list(ctx.coords(raw))


def _poly(f: PolyA) -> list:
    return [_fq(f.ctx, c) for c in f.c]


def _coeff(ring, c):
    if isinstance(ring, IntegerRing):
        return c
    if isinstance(ring, FiniteFieldRing):
        return _fq(ring.ctx, c)
    if isinstance(ring, PolynomialRing):
        return _poly(c)
    if isinstance(ring, FractionField):
        return {"num": _poly(c.num), "den": _poly(c.den)}
    raise UsageError(f"no JSON encoding for coefficients in {ring}")


def to_json(obj):
    """Encode a FieldCtx, FqElem, PolyA, RatFun, MultiPoly, TruncSeries or TwistedPoly."""
    from .carlitz import TwistedPoly
    if isinstance(obj, FieldCtx):
        return field_to_json(obj)
    if isinstance(obj, FqElem):
        return _fq(obj.ctx, obj.value)
    if isinstance(obj, PolyA):
        return _poly(obj)
    if isinstance(obj, RatFun):
        return {"num": _poly(obj.num), "den": _poly(obj.den)}
    if isinstance(obj, MultiPoly):
        return [{"exps": mono, "coeff": _coeff(obj.ring, c)} for mono, c in obj.monomials()]
    if isinstance(obj, TruncSeries):
        return {"var": obj.var, "order": obj.order, "poly": to_json(obj.to_multipoly())}
    if isinstance(obj, TwistedPoly):
        return [_poly(c) for c in obj.coeffs]
    if isinstance(obj, (list, tuple)):
        return [to_json(x) for x in obj]
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    return obj


def dumps(obj, **kw) -> str:
    return json.dumps(to_json(obj), ensure_ascii=False, **kw)


# --- decoding -------------------------------------------------------------------

def fq_from_json(ctx: FieldCtx, coords) -> FqElem:
    if len(coords) != ctx.e:
        raise UsageError(f"expected {ctx.e} coordinates, got {len(coords)}")
    return FqElem(ctx, ctx.from_coords(coords))


def poly_from_json(ctx: FieldCtx, data) -> PolyA:
    return PolyA(ctx, [fq_from_json(ctx, c) for c in data])


def ratfun_from_json(ctx: FieldCtx, data) -> RatFun:
    return RatFun(poly_from_json(ctx, data["num"]), poly_from_json(ctx, data["den"]))


def multipoly_from_json(ctx: FieldCtx | None, ring: str, data) -> MultiPoly:
    """``ring`` is one of 'ZZ', 'Fq', 'A', 'K'."""
    if ring == 'ZZ':
        R, dec = ZZ, int
    elif ring == 'Fq':
        R, dec = Fq(ctx), lambda c: ctx.from_coords(c)
    elif ring == 'A':
        R, dec = A(ctx), lambda c: poly_from_json(ctx, c)
    elif ring == 'K':
        R, dec = K(ctx), lambda c: ratfun_from_json(ctx, c)
    else:
        raise UsageError(f"unknown coefficient ring {ring!r}")
    items = [({canon_var(v): d for v, d in t["exps"].items()}, dec(t["coeff"])) for t in data]
    return MultiPoly.from_terms(R, items)
