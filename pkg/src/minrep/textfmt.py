"""Text format for scalars and polynomials.

Examples of the format::

    (3/2+1/2i)*z1^2*z2
    pi^(1/2)
    -1/4*s*z1^2 + 1/2i
    z1^(-2)*z2

``s`` is the square root of the radicand, ``i`` the imaginary unit.  A number
directly followed by ``i`` is read as a product.  ``a/b`` is one token.
Printing is canonical, so ``parse(format(p)) == p`` and
``format(parse(format(p))) == format(p)``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .scalar import Scalar

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z]+\d*)|([-+*^()]))")


def _gauss(re_, im) -> str:
    if im == 0:
        return str(re_)
    if re_ == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return f"{im}i"
    sign = "+" if im > 0 else "-"
    mag = abs(im)
    tail = "i" if mag == 1 else f"{mag}i"
    return f"({re_}{sign}{tail})"


def _pi_factor(p: Fraction) -> str:
    if p == 1:
        return "pi"
    if p.denominator == 1 and p > 0:
        return f"pi^{p}"
    return f"pi^({p})"


def _with_factors(coef: str, factors: list[str]) -> str:
    if not factors:
        return coef
    body = "*".join(factors)
    if coef == "1":
        return body
    if coef == "-1":
        return "-" + body
    return f"{coef}*{body}"


def _join(pieces: list[str]) -> str:
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def _scalar_key(k):
    return (k[0], k[1])


def format_scalar(x: Scalar) -> str:
    pieces = []
    for key in sorted(x.terms, key=_scalar_key):
        p, e = key
        re_, im = x.terms[key]
        factors = []
        if p != 0:
            factors.append(_pi_factor(p))
        if e:
            factors.append("s")
        pieces.append(_with_factors(_gauss(re_, im), factors))
    return _join(pieces)


def _monomial(exps, var: str) -> list[str]:
    out = []
    for idx, k in enumerate(exps, start=1):
        if k == 0:
            continue
        if k == 1:
            out.append(f"{var}{idx}")
        elif k > 0:
            out.append(f"{var}{idx}^{k}")
        else:
            out.append(f"{var}{idx}^({k})")
    return out


def _mono_order(exps):
    # higher total degree first, then lexicographically larger exponent first
    return (-sum(exps), tuple(-k for k in exps))


def format_poly(poly, var: str = "z") -> str:
    pieces = []
    for exps in sorted(poly.terms, key=_mono_order):
        coef = poly.terms[exps]
        factors = _monomial(exps, var)
        cstr = format_scalar(coef)
        if len(coef.terms) > 1:
            cstr = f"({cstr})"
        pieces.append(_with_factors(cstr, factors))
    return _join(pieces)


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, nvars: int, d, var: str):
        self.tokens = self._lex(text)
        self.pos = 0
        self.nvars = nvars
        self.d = d
        self.var = var

    @staticmethod
    def _lex(text):
        tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
            num, ident, op = m.groups()
            if num is not None:
                tokens.append(("num", num))
            elif ident is not None:
                tokens.append(("id", ident))
            else:
                tokens.append(("op", op))
            pos = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}")
        self.pos += 1
        return tok

    # -- grammar -------------------------------------------------------------
    def parse(self):
        out = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return out

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        total = self.term()
        if sign < 0:
            total = -total
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self):
        val = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            val = val * self.factor()
        return val

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        base, kind = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            exp = self.exponent()
            if kind == "pi":
                return self._const(Scalar.pi(exp, self.d))
            if exp.denominator != 1:
                raise ParseError("only pi takes fractional exponents")
            return base ** int(exp)
        return base

    def exponent(self) -> Fraction:
        if self.peek() == ("op", "("):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            val = Fraction(self.take("num")[1])
            self.take("op", ")")
            return sign * val
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        return sign * Fraction(self.take("num")[1])

    def _const(self, c: Scalar):
        from .poly import LaurentPoly

        return LaurentPoly.constant(c, self.nvars)

    def atom(self):
        from .poly import LaurentPoly

        kind, val = self.peek()
        if kind == "num":
            self.take()
            c = Scalar(Fraction(val), self.d)
            if self.peek() == ("id", "i"):
                self.take()
                c = c * Scalar.i()
            return self._const(c), "num"
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner, "group"
        if kind == "id":
            self.take()
            if val == "i":
                return self._const(Scalar.i(self.d)), "i"
            if val == "pi":
                return self._const(Scalar.pi(1, self.d)), "pi"
            if val == "s":
                if self.d is None:
                    raise ParseError("'s' needs a radicand")
                return self._const(Scalar.s(self.d)), "s"
            m = re.fullmatch(re.escape(self.var) + r"(\d+)", val)
            if m:
                idx = int(m.group(1)) - 1
                if not 0 <= idx < self.nvars:
                    raise ParseError(f"variable {val} out of range for {self.nvars} variables")
                return LaurentPoly.var(idx, self.nvars, self.d), "var"
            raise ParseError(f"unknown symbol {val!r}")
        raise ParseError(f"unexpected token {val!r}")


def parse_laurent(text: str, nvars: int, d=None, var: str = "z"):
    d = None if d is None else Fraction(d)
    return _Parser(text, nvars, d, var).parse()


def parse_poly(text: str, nvars: int, d=None, var: str = "z"):
    from .poly import MultiPoly

    lp = parse_laurent(text, nvars, d, var)
    return MultiPoly.from_laurent(lp)


def parse_scalar(text: str, d=None) -> Scalar:
    lp = parse_laurent(text, 0, d)
    return lp.terms.get((), Scalar(0, lp.d))
