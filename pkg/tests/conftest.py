from fractions import Fraction

from hypothesis import strategies as st

from minrep.poly import MultiPoly
from minrep.scalar import Scalar

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def scalars(draw, d=Fraction(2), radical=True, pi=False):
    re, im = draw(small), draw(small)
    x = Scalar(re, d) + Scalar.i(d) * im
    if radical:
        x = x + Scalar.s(d) * draw(small)
    if pi:
        x = x * Scalar.pi(draw(st.sampled_from([Fraction(1, 2), 1, 2])), d)
    return x


@st.composite
def polys(draw, nvars=2, max_deg=3, d=Fraction(2)):
    p = MultiPoly.zero(nvars, d)
    for _ in range(draw(st.integers(0, 4))):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in range(nvars))
        p = p + MultiPoly.monomial(exps, draw(scalars(d=d)), d)
    return p
