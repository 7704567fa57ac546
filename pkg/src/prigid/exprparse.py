"""Small expression parser for command-line field elements and polynomials.

Grammar (recursive descent, no implicit multiplication):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('-' | '+') factor | atom ('^' exponent)?
    atom   := INT | 't' | 'x' | 'X' | '(' expr ')' | '[' INT (',' INT)* ']'
            | 'O' '(' 't' '^' INT ')'

't' is the series or function-field variable, 'x'/'X' the polynomial
unknown.  '[c0,c1,...]' is a coefficient window starting at t^0, so the
stored literal form 't^2*[1,0,3]+O(t^8)' parses back to itself.  Division
by anything involving the unknown is rejected.
"""

from __future__ import annotations

import re
from typing import List, Optional

from .errors import UsageError

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


class _Scalar:
    """Finite-field value with operator plumbing for the evaluator."""

    __slots__ = ("fq", "v")

    def __init__(self, fq, v):
        self.fq = fq
        self.v = v

    def __add__(self, o):
        return _Scalar(self.fq, self.fq.add(self.v, o.v))

    def __sub__(self, o):
        return _Scalar(self.fq, self.fq.sub(self.v, o.v))

    def __mul__(self, o):
        return _Scalar(self.fq, self.fq.mul(self.v, o.v))

    def __truediv__(self, o):
        return _Scalar(self.fq, self.fq.div(self.v, o.v))

    def __neg__(self):
        return _Scalar(self.fq, self.fq.neg(self.v))

    def __pow__(self, e):
        return _Scalar(self.fq, self.fq.pow(self.v, e))


class _PolyVal:
    """Polynomial in the unknown, low degree first, over parsed scalars."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = coeffs

    def __len__(self):
        return len(self.coeffs)


def _tokens(text: str) -> List[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or not m.group(0).strip():
            break
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    if text[pos:].strip():
        raise UsageError(f"cannot tokenize {text[pos:].strip()!r}")
    return out


class _Parser:
    def __init__(self, text: str, env):
        self.toks = _tokens(text)
        self.pos = 0
        self.env = env

    def peek(self) -> Optional[str]:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise UsageError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise UsageError(f"expected {tok!r}, found {got!r}")

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise UsageError(f"trailing input at {self.peek()!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = self.env.add(v, w) if op == "+" else self.env.sub(v, w)
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            w = self.factor()
            v = self.env.mul(v, w) if op == "*" else self.env.div(v, w)
        return v

    def factor(self):
        tok = self.peek()
        if tok in ("-", "+"):
            self.take()
            v = self.factor()
            return self.env.neg(v) if tok == "-" else v
        v = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.exponent()
            v = self.env.pow(v, e)
        return v

    def exponent(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise UsageError(f"exponent must be an integer, found {tok!r}")
        return sign * int(tok)

    def atom(self):
        tok = self.take()
        if tok.isdigit():
            return self.env.from_int(int(tok))
        if tok in ("x", "X"):
            return self.env.unknown()
        if tok == "t":
            return self.env.t()
        if tok == "O":
            self.expect("(")
            self.expect("t")
            self.expect("^")
            n = self.exponent()
            self.expect(")")
            return self.env.order_marker(n)
        if tok == "(":
            v = self.expr()
            self.expect(")")
            return v
        if tok == "[":
            ints = [self.signed_int()]
            while self.peek() == ",":
                self.take()
                ints.append(self.signed_int())
            self.expect("]")
            return self.env.window(ints)
        raise UsageError(f"unexpected token {tok!r}")

    def signed_int(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.take()
        if not tok.isdigit():
            raise UsageError(f"expected an integer, found {tok!r}")
        return sign * int(tok)


class _Env:
    """Evaluation rules over one ambient field, plus the unknown."""

    def __init__(self, ctx, allow_unknown: bool):
        self.ctx = ctx
        self.allow_unknown = allow_unknown

    # scalar constructors, per context kind

    def from_int(self, n: int):
        if self.ctx.kind == "gf":
            return _Scalar(self.ctx.fq, self.ctx.fq.constant(n))
        if self.ctx.kind == "laurent":
            return self.ctx.laurent.from_int(n)
        return self.ctx.ratfunc.from_int(n)

    def t(self):
        if self.ctx.kind == "gf":
            raise UsageError("t is not defined over a finite field")
        if self.ctx.kind == "laurent":
            return self.ctx.laurent.t()
        return self.ctx.ratfunc.t()

    def window(self, ints: List[int]):
        if self.ctx.kind != "laurent":
            raise UsageError("coefficient windows only make sense for series")
        L = self.ctx.laurent
        return L.from_int_coeffs(0, ints)

    def order_marker(self, n: int):
        if self.ctx.kind != "laurent":
            raise UsageError("order terms only make sense for series")
        L = self.ctx.laurent
        return L.make(n, [], False, n)

    def unknown(self):
        if not self.allow_unknown:
            raise UsageError("the unknown x does not belong in an element")
        return _PolyVal([self.from_int(0), self.from_int(1)])

    # arithmetic with scalar/polynomial coercion

    def _zero(self):
        return self.from_int(0)

    def _aspoly(self, v) -> _PolyVal:
        return v if isinstance(v, _PolyVal) else _PolyVal([v])

    def add(self, a, b):
        if isinstance(a, _PolyVal) or isinstance(b, _PolyVal):
            pa, pb = self._aspoly(a).coeffs, self._aspoly(b).coeffs
            n = max(len(pa), len(pb))
            out = []
            for i in range(n):
                x = pa[i] if i < len(pa) else self._zero()
                y = pb[i] if i < len(pb) else self._zero()
                out.append(x + y)
            return _PolyVal(out)
        return a + b

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if isinstance(a, _PolyVal):
            return _PolyVal([-c for c in a.coeffs])
        return -a

    def mul(self, a, b):
        if isinstance(a, _PolyVal) or isinstance(b, _PolyVal):
            pa, pb = self._aspoly(a).coeffs, self._aspoly(b).coeffs
            out = [self._zero() for _ in range(len(pa) + len(pb) - 1)]
            for i, x in enumerate(pa):
                for j, y in enumerate(pb):
                    out[i + j] = out[i + j] + x * y
            return _PolyVal(out)
        return a * b

    def div(self, a, b):
        if isinstance(b, _PolyVal):
            raise UsageError("cannot divide by an expression in the unknown")
        if isinstance(a, _PolyVal):
            return _PolyVal([c / b for c in a.coeffs])
        return a / b

    def pow(self, a, e: int):
        if isinstance(a, _PolyVal):
            if e < 0:
                raise UsageError("negative powers of the unknown are not defined")
            out = _PolyVal([self.from_int(1)])
            for _ in range(e):
                out = self.mul(out, a)
            return out
        return a ** e


def parse_element(ctx, text: str):
    """One element of the context field: a LaurentElem, RatFuncElem, or
    finite-field value depending on the context kind."""
    v = _Parser(text, _Env(ctx, allow_unknown=False)).parse()
    if isinstance(v, _Scalar):
        return v.v
    return v


def parse_poly(ctx, text: str) -> list:
    """Polynomial in x over the context field, low degree first."""
    v = _Parser(text, _Env(ctx, allow_unknown=True)).parse()
    coeffs = v.coeffs if isinstance(v, _PolyVal) else [v]
    return [c.v if isinstance(c, _Scalar) else c for c in coeffs]
