"""Exact scalars in Q(i)[s, sqrt(pi)] with s**2 = d.

A :class:`Scalar` is a finite sum of terms ``g * pi**p * s**e`` where ``g`` is a
Gaussian rational, ``p`` is a half-integer and ``e`` is 0 or 1.  The radicand
``d`` is fixed per scalar; for a rank ``r`` model it is ``r - 1``.  When ``d``
is the square of a rational, ``s`` is folded into the rational part so the
representation stays canonical.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

ZERO = Fraction(0)
ONE = Fraction(1)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as an exact rational")


class RadicandMismatch(ValueError):
    pass


class Scalar:
    """Immutable exact scalar.

    ``terms`` maps ``(pi_power, s_power)`` to ``(re, im)``.
    """

    __slots__ = ("terms", "d", "_hash")

    def __init__(self, value=0, d=None, *, _terms=None):
        if _terms is not None:
            self.terms = _terms
            self.d = d
            self._hash = None
            return
        if isinstance(value, Scalar):
            self.terms = value.terms
            self.d = value.d if d is None else d
            self._hash = None
            return
        if isinstance(value, complex):
            re, im = Fraction(value.real), Fraction(value.imag)
        elif isinstance(value, tuple):
            re, im = _as_fraction(value[0]), _as_fraction(value[1])
        else:
            re, im = _as_fraction(value), ZERO
        self.d = None if d is None else Fraction(d)
        self.terms = {} if (re == 0 and im == 0) else {(ZERO, 0): (re, im)}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _build(cls, raw: dict, d) -> "Scalar":
        """Normalise a raw term map (drops zeros, reduces s)."""
        out: dict = {}
        root = None
        if d is not None:
            root = _rational_sqrt(d) if d >= 0 else None
        for (p, e), (re, im) in raw.items():
            if e >= 2:
                k, e = divmod(e, 2)
                if d is None:
                    raise ValueError("s used without a radicand")
                f = d ** k
                re, im = re * f, im * f
            if e == 1:
                if d is None:
                    raise ValueError("s used without a radicand")
                if root is not None:
                    re, im, e = re * root, im * root, 0
            if re == 0 and im == 0:
                continue
            key = (p, e)
            if key in out:
                ore, oim = out[key]
                re, im = ore + re, oim + im
                if re == 0 and im == 0:
                    del out[key]
                    continue
            out[key] = (re, im)
        return cls(d=d, _terms=out)

    @classmethod
    def i(cls, d=None) -> "Scalar":
        return cls((0, 1), d)

    @classmethod
    def s(cls, d) -> "Scalar":
        """The formal square root of ``d``."""
        d = Fraction(d)
        if d < 0:
            raise ValueError("radicand must be non-negative; use i*s for imaginary roots")
        return cls._build({(ZERO, 1): (ONE, ZERO)}, d)

    @classmethod
    def pi(cls, power=1, d=None) -> "Scalar":
        p = Fraction(power)
        if p.denominator not in (1, 2):
            raise ValueError("pi powers must be half-integers")
        return cls(d=None if d is None else Fraction(d), _terms={(p, 0): (ONE, ZERO)})

    # -- basic predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_rational(self) -> bool:
        return all(k == (ZERO, 0) and v[1] == 0 for k, v in self.terms.items())

    def is_gaussian_rational(self) -> bool:
        return all(k == (ZERO, 0) for k in self.terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms.get((ZERO, 0), (ZERO, ZERO))[0]

    def gaussian_parts(self) -> tuple[Fraction, Fraction]:
        if not self.is_gaussian_rational():
            raise ValueError(f"{self} is not a Gaussian rational")
        return self.terms.get((ZERO, 0), (ZERO, ZERO))

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction, complex, Rational)):
            return Scalar(other)
        return NotImplemented

    def _join_d(self, other: "Scalar"):
        a, b = self.d, other.d
        if a is None:
            return b
        if b is None or a == b:
            return a
        # a scalar without an s-term does not care about its radicand
        if not any(e for (_, e) in other.terms):
            return a
        if not any(e for (_, e) in self.terms):
            return b
        raise RadicandMismatch(f"cannot combine radicands {a} and {b}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._join_d(other)
        if not other.terms:
            return Scalar(d=d, _terms=self.terms)
        if not self.terms:
            return Scalar(d=d, _terms=other.terms)
        out = dict(self.terms)
        for k, (re, im) in other.terms.items():
            if k in out:
                ore, oim = out[k]
                re, im = ore + re, oim + im
                if re == 0 and im == 0:
                    del out[k]
                    continue
            out[k] = (re, im)
        return Scalar(d=d, _terms=out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(d=self.d, _terms={k: (-re, -im) for k, (re, im) in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._join_d(other)
        if not self.terms or not other.terms:
            return Scalar(d=d, _terms={})
        raw: dict = {}
        for (p1, e1), (a, b) in self.terms.items():
            for (p2, e2), (c, dd) in other.terms.items():
                key = (p1 + p2, e1 + e2)
                re, im = a * c - b * dd, a * dd + b * c
                if key in raw:
                    ore, oim = raw[key]
                    raw[key] = (ore + re, oim + im)
                else:
                    raw[key] = (re, im)
        return Scalar._build(raw, d)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        """Complex conjugate; ``s`` and ``pi`` are real."""
        return Scalar(d=self.d, _terms={k: (re, -im) for k, (re, im) in self.terms.items()})

    def inverse(self) -> "Scalar":
        if not self.terms:
            raise ZeroDivisionError("inverse of zero scalar")
        powers = {p for (p, _) in self.terms}
        if len(powers) != 1:
            raise ValueError(f"cannot invert {self}: mixed powers of pi")
        (p,) = powers
        A = self.terms.get((p, 0), (ZERO, ZERO))
        B = self.terms.get((p, 1), (ZERO, ZERO))
        # (A + B s)^-1 = (A - B s) / (A^2 - B^2 d)
        d = self.d if self.d is not None else ZERO
        a2 = (A[0] * A[0] - A[1] * A[1], 2 * A[0] * A[1])
        b2 = (B[0] * B[0] - B[1] * B[1], 2 * B[0] * B[1])
        nr, ni = a2[0] - b2[0] * d, a2[1] - b2[1] * d
        den = nr * nr + ni * ni
        if den == 0:
            raise ZeroDivisionError(f"{self} is a zero divisor")
        inv_n = (nr / den, -ni / den)

        def cmul(x, y):
            return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

        raw = {(-p, 0): cmul(A, inv_n)}
        nb = cmul((-B[0], -B[1]), inv_n)
        if nb != (0, 0):
            raw[(-p, 1)] = nb
        return Scalar._build(raw, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar(1, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            if self.terms != other.terms:
                return False
            if any(e for (_, e) in self.terms):
                return self.d == other.d
            return True
        if isinstance(other, (int, Fraction, complex, Rational)):
            return self == Scalar(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- numerics ------------------------------------------------------------
    def to_complex(self) -> complex:
        total = 0j
        root = math.sqrt(self.d) if self.d is not None and self.d >= 0 else 0.0
        for (p, e), (re, im) in self.terms.items():
            total += complex(float(re), float(im)) * math.pi ** float(p) * (root if e else 1.0)
        return total

    def __complex__(self):
        return self.to_complex()

    def __float__(self):
        z = self.to_complex()
        if abs(z.imag) > 1e-12 * max(1.0, abs(z.real)):
            raise ValueError(f"{self} is not real")
        return z.real

    # -- text ----------------------------------------------------------------
    def __str__(self):
        from .textfmt import format_scalar

        return format_scalar(self)

    def __repr__(self):
        suffix = "" if self.d is None else f", d={self.d}"
        return f"Scalar({str(self)!r}{suffix})"


def as_scalar(x, d=None) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x, d)
