"""Sparse multivariate (Laurent) polynomials over :class:`Scalar`."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .scalar import Scalar, as_scalar


class InexactDivision(ArithmeticError):
    pass


def _add_into(acc: dict, key, coef: Scalar):
    if key in acc:
        v = acc[key] + coef
        if v.is_zero():
            del acc[key]
        else:
            acc[key] = v
    elif not coef.is_zero():
        acc[key] = coef


class LaurentPoly:
    """Polynomial in ``nvars`` variables whose exponents may be negative.

    ``terms`` maps exponent tuples to non-zero scalars.  Instances are treated
    as immutable; every operation returns a new object.
    """

    __slots__ = ("nvars", "terms", "d", "_hash")
    allow_negative = True

    def __init__(self, nvars: int, terms=None, d=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for k, v in terms.items():
                k = tuple(k)
                if len(k) != nvars:
                    raise ValueError(f"exponent {k} has wrong length for {nvars} variables")
                if not self.allow_negative and any(e < 0 for e in k):
                    raise ValueError(f"negative exponent {k} in a polynomial")
                v = as_scalar(v)
                if not v.is_zero():
                    clean[k] = v
                    if d is None and v.d is not None:
                        d = v.d
        self.terms = clean
        self.d = None if d is None else Fraction(d)
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, d):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj.d = d
        obj._hash = None
        return obj

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, d=None):
        return cls._raw(nvars, {}, None if d is None else Fraction(d))

    @classmethod
    def constant(cls, c, nvars: int, d=None):
        c = as_scalar(c, d)
        return cls(nvars, {(0,) * nvars: c}, d if d is not None else c.d)

    @classmethod
    def var(cls, i: int, nvars: int, d=None):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Scalar(1)}, d)

    @classmethod
    def monomial(cls, exps, coef=1, d=None):
        exps = tuple(exps)
        return cls(len(exps), {exps: as_scalar(coef, d)}, d)

    # -- basic protocol --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, Scalar, Rational, complex)):
            return self == type(self).constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def coeff(self, exps) -> Scalar:
        return self.terms.get(tuple(exps), Scalar(0, self.d))

    def _other(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction, Scalar, Rational, complex)):
            return type(self).constant(other, self.nvars)
        return NotImplemented

    def _cls(self, other):
        if isinstance(self, MultiPoly) and isinstance(other, MultiPoly):
            return MultiPoly
        return LaurentPoly

    def _d(self, other):
        return self.d if self.d is not None else other.d

    # -- ring operations ---------------------------------------------------------
    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return self._cls(other)._raw(self.nvars, out, self._d(other))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.nvars, {k: -v for k, v in self.terms.items()}, self.d)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        c = as_scalar(c)
        if c.is_zero():
            return type(self)._raw(self.nvars, {}, self.d)
        out = {}
        for k, v in self.terms.items():
            w = v * c
            if not w.is_zero():
                out[k] = w
        return type(self)._raw(self.nvars, out, self.d if self.d is not None else c.d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar, Rational, complex)):
            return self.scale(other)
        other = self._other(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                _add_into(out, key, v1 * v2)
        return self._cls(other)._raw(self.nvars, out, self._d(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar, Rational, complex)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Scalar, Rational, complex)):
            return self.scale(as_scalar(other).inverse())
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials")
            ((k, v),) = self.terms.items()
            return LaurentPoly._raw(self.nvars, {tuple(-e * -n for e in k): v.inverse() ** -n}, self.d)
        result = type(self).constant(1, self.nvars, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structure ----------------------------------------------------------------
    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(k) for k in self.terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def homogeneous(self, deg: int):
        return type(self)._raw(self.nvars, {k: v for k, v in self.terms.items() if sum(k) == deg}, self.d)

    def homogeneous_parts(self) -> dict:
        parts: dict = {}
        for k, v in self.terms.items():
            parts.setdefault(sum(k), {})[k] = v
        return {deg: type(self)._raw(self.nvars, t, self.d) for deg, t in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def map_coeffs(self, fn):
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if not w.is_zero():
                out[k] = w
        return type(self)._raw(self.nvars, out, self.d)

    def conj_coeffs(self):
        return self.map_coeffs(lambda c: c.conjugate())

    # -- calculus -------------------------------------------------------------------
    def diff(self, i: int):
        out: dict = {}
        for k, v in self.terms.items():
            e = k[i]
            if e == 0:
                continue
            nk = k[:i] + (e - 1,) + k[i + 1:]
            _add_into(out, nk, v * e)
        return type(self)._raw(self.nvars, out, self.d)

    def euler(self):
        """Sum of z_i d/dz_i: scales each term by its total degree."""
        out = {}
        for k, v in self.terms.items():
            deg = sum(k)
            if deg:
                out[k] = v * deg
        return type(self)._raw(self.nvars, out, self.d)

    def laplace(self):
        """Sum of pure second derivatives."""
        out: dict = {}
        for k, v in self.terms.items():
            for i, e in enumerate(k):
                f = e * (e - 1)
                if f:
                    nk = k[:i] + (e - 2,) + k[i + 1:]
                    _add_into(out, nk, v * f)
        return type(self)._raw(self.nvars, out, self.d)

    def rsq_mul(self):
        """Multiply by z_1^2 + ... + z_n^2."""
        out: dict = {}
        for k, v in self.terms.items():
            for i in range(self.nvars):
                nk = k[:i] + (k[i] + 2,) + k[i + 1:]
                _add_into(out, nk, v)
        return type(self)._raw(self.nvars, out, self.d)

    def mul_var(self, i: int, power: int = 1):
        out = {k[:i] + (k[i] + power,) + k[i + 1:]: v for k, v in self.terms.items()}
        cls = type(self) if power >= 0 or all(k[i] + power >= 0 for k in self.terms) else LaurentPoly
        return cls._raw(self.nvars, out, self.d)

    def substitute_inverse(self) -> "LaurentPoly":
        """z_i -> 1/z_i, i.e. negate every exponent."""
        return LaurentPoly._raw(self.nvars, {tuple(-e for e in k): v for k, v in self.terms.items()}, self.d)

    # -- evaluation and composition ------------------------------------------------------
    def __call__(self, *point):
        return self.evaluate(point)

    def evaluate(self, point) -> Scalar:
        point = [as_scalar(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        total = Scalar(0, self.d)
        cache: dict = {}
        for k, v in self.terms.items():
            term = v
            for i, e in enumerate(k):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = point[i] ** e
                    term = term * cache[key]
            total = total + term
        return total

    def compose(self, subs):
        """Substitute ``subs[i]`` (polynomials in a common ring) for variable i."""
        subs = list(subs)
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        target = subs[0].nvars if subs else 0
        d = self.d
        for s in subs:
            if d is None:
                d = s.d
        total = MultiPoly.zero(target, d)
        cache: dict = {}
        for k, v in self.terms.items():
            term = MultiPoly.constant(v, target, d)
            for i, e in enumerate(k):
                if e < 0:
                    raise ValueError("compose needs non-negative exponents")
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = subs[i] ** e
                    term = term * cache[(i, e)]
            total = total + term
        return total

    # -- text ------------------------------------------------------------------------------
    def to_text(self, var: str = "z") -> str:
        from .textfmt import format_poly

        return format_poly(self, var)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {self.to_text()!r})"


class MultiPoly(LaurentPoly):
    """Polynomial with non-negative exponents."""

    __slots__ = ()
    allow_negative = False

    @classmethod
    def from_laurent(cls, lp: LaurentPoly) -> "MultiPoly":
        return cls(lp.nvars, lp.terms, lp.d)

    def leading(self):
        """Lexicographically largest term as ``(exps, coef)``."""
        k = max(self.terms)
        return k, self.terms[k]

    def divide_exact(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises :class:`InexactDivision` on a remainder."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lk, lc = divisor.leading()
        inv = lc.inverse()
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            k = max(rem)
            c = rem[k]
            shift = tuple(a - b for a, b in zip(k, lk))
            if any(e < 0 for e in shift):
                raise InexactDivision(f"leading term {k} not divisible by {lk}")
            q = c * inv
            quot[shift] = q
            for dk, dv in divisor.terms.items():
                key = tuple(a + b for a, b in zip(dk, shift))
                _add_into(rem, key, -(dv * q))
        return MultiPoly._raw(self.nvars, quot, self._d(divisor))

    def translate(self, shift):
        """p(z) -> p(z - a)."""
        shift = [as_scalar(a) for a in shift]
        subs = [MultiPoly.var(i, self.nvars) - shift[i] for i in range(self.nvars)]
        return self.compose(subs)


def variables(nvars: int, d=None):
    return [MultiPoly.var(i, nvars, d) for i in range(nvars)]


def monomials(nvars: int, deg: int):
    """All exponent tuples of total degree ``deg``, in lexicographic order."""
    if nvars == 0:
        if deg == 0:
            yield ()
        return
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in monomials(nvars - 1, deg - first):
            yield (first,) + rest


def monomial_basis(nvars: int, max_deg: int):
    return [e for deg in range(max_deg + 1) for e in monomials(nvars, deg)]
