from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minrep.poly import InexactDivision, LaurentPoly, MultiPoly, monomial_basis, monomials
from minrep.scalar import RadicandMismatch, Scalar
from minrep.textfmt import ParseError, parse_laurent, parse_poly, parse_scalar

from conftest import polys, scalars


@given(scalars(), scalars(), scalars())
def test_scalar_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(scalars(radical=False, pi=True))
def test_inverse_of_single_pi_power(x):
    if not x.is_zero():
        assert x * x.inverse() == 1


@given(scalars(), scalars())
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_radical_squares_to_radicand():
    s = Scalar.s(3)
    assert s * s == 3
    # a rational square radicand folds away
    assert Scalar.s(4) == 2


def test_radicand_mismatch_only_with_radicals():
    assert Scalar(1, 2) + Scalar(1, 3) == 2
    with pytest.raises(RadicandMismatch):
        Scalar.s(2) + Scalar.s(3)


def test_pi_half_powers():
    root = Scalar.pi(Fraction(1, 2))
    assert root * root == Scalar.pi(1)
    assert str(root) == "pi^(1/2)"


@given(scalars(pi=True))
def test_scalar_text_round_trip(x):
    assert parse_scalar(str(x), 2) == x


@given(polys(), polys(), polys())
@settings(max_examples=50)
def test_poly_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(polys())
@settings(max_examples=50)
def test_poly_text_round_trip(p):
    assert parse_poly(p.to_text(), 2, 2) == p


def test_laurent_text():
    p = LaurentPoly.monomial((2, -1), Scalar.i())
    assert p.to_text() == "i*z1^2*z2^(-1)"
    assert parse_laurent("i*z1^2*z2^(-1)", 2) == p


def test_parse_error():
    with pytest.raises(ParseError):
        parse_poly("z1 + * z2", 2)


@given(polys(max_deg=2), polys(max_deg=2))
@settings(max_examples=50)
def test_leibniz_rule(p, q):
    assert (p * q).diff(0) == p.diff(0) * q + p * q.diff(0)


@given(polys())
@settings(max_examples=50)
def test_euler_counts_degree(p):
    for deg, part in p.homogeneous_parts().items():
        assert part.euler() == part * deg


@given(polys(max_deg=2), polys(max_deg=2))
@settings(max_examples=30)
def test_exact_division_recovers_factor(p, q):
    if q.is_zero():
        return
    assert (p * q).divide_exact(q) == p


def test_inexact_division_raises():
    x, y = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    with pytest.raises(InexactDivision):
        (x * x + y).divide_exact(x)


def test_translate_matches_composition():
    x, y = MultiPoly.var(0, 2), MultiPoly.var(1, 2)
    p = x * x * y
    assert p.translate([1, 2]) == (x - 1) * (x - 1) * (y - 2)


def test_monomial_counts():
    assert len(list(monomials(3, 4))) == 15
    assert len(list(monomial_basis(2, 6))) == 28


@given(st.integers(0, 3), st.integers(0, 3))
def test_laplace_of_rsq(a, b):
    # Delta(|z|^2 f) - |z|^2 Delta f = 2r f + 4 Eu f
    f = MultiPoly.monomial((a, b))
    lhs = f.rsq_mul().laplace() - f.laplace().rsq_mul()
    assert lhs == f * 4 + f.euler() * 4
