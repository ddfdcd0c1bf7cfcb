"""Parser for polynomial literals such as ``(u+1)*t^2 + u``.

``t`` (or ``θ``) stands for theta; ``u`` is the generator of F_q over F_p
and is only available when e > 1.  Integers are reduced mod p.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import FieldCtx
from .poly import PolyA

_TOKEN = re.compile(r'\s*(?:(\d+)|([tθu])|(\*\*|[-+*^()]))')


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = 'num' if m.group(1) else 'var' if m.group(2) else 'op'
        value = m.group(1) or m.group(2) or m.group(3)
        if value == '**':
            value = '^'
        out.append((kind, value, m.start(m.lastindex) + 1))
        pos = m.end()
    out.append(('end', '', len(text) + 1))
    return out


class _Parser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, col = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", col)

    def parse(self):
        out = self.expr()
        kind, v, col = self.peek()
        if kind != 'end':
            raise ParseError(f"unexpected {v!r}", col)
        return out

    def expr(self):
        kind, v, _ = self.peek()
        sign = 1
        if v in '+-' and kind == 'op':
            self.take()
            sign = -1 if v == '-' else 1
        out = self.term()
        if sign < 0:
            out = -out
        while True:
            kind, v, _ = self.peek()
            if kind == 'op' and v in ('+', '-'):
                self.take()
                rhs = self.term()
                out = out + rhs if v == '+' else out - rhs
            else:
                return out

    def term(self):
        out = self.power()
        while True:
            kind, v, _ = self.peek()
            if kind == 'op' and v == '*':
                self.take()
                out = out * self.power()
            elif kind in ('num', 'var') or v == '(':
                out = out * self.power()  # implicit product such as 2t or (t+1)(t+2)
            else:
                return out

    def power(self):
        base = self.atom()
        kind, v, col = self.peek()
        if kind == 'op' and v == '^':
            self.take()
            kind, n, col = self.take()
            if kind != 'num':
                raise ParseError("exponent must be a non-negative integer", col)
            base = base ** int(n)
        return base

    def atom(self):
        kind, v, col = self.take()
        ctx = self.ctx
        if kind == 'num':
            return PolyA.const(ctx, ctx.from_int(int(v)))
        if kind == 'var':
            if v in 'tθ':
                return PolyA.theta(ctx)
            if ctx.e == 1:
                raise ParseError("'u' is only defined for extension fields (e > 1)", col)
            return PolyA.const(ctx, ctx.gen())
        if v == '(':
            out = self.expr()
            self.expect(')')
            return out
        raise ParseError(f"unexpected {v or 'end of input'!r}", col)


def parse_poly(ctx: FieldCtx, text: str) -> PolyA:
    """Parse a polynomial literal in t over the field ``ctx``."""
    if not text.strip():
        raise ParseError("empty polynomial literal", 1)
    return _Parser(ctx, text).parse()


def parse_pairs(text: str):
    """Parse ``j:mu,j:mu,...`` into a tuple of integer pairs."""
    out = []
    col = 1
    for chunk in text.split(','):
        m = re.fullmatch(r'\s*(\d+)\s*:\s*(\d+)\s*', chunk)
        if not m:
            raise ParseError(f"expected j:mu, found {chunk.strip()!r}", col)
        out.append((int(m.group(1)), int(m.group(2))))
        col += len(chunk) + 1
    return tuple(out)


def parse_int_list(text: str):
    out = []
    col = 1
    for chunk in text.split(','):
        try:
            out.append(int(chunk))
        except ValueError:
            raise ParseError(f"expected an integer, found {chunk.strip()!r}", col) from None
        col += len(chunk) + 1
    return tuple(out)
