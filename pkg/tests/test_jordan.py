import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minrep import jordan
from minrep.jordan import (apply_matrix, det_delta, inverse, jordan_mul, quad_apply, quad_rep,
                           rank_one, sym, trace)
from minrep.scalar import Scalar

ints = st.integers(-4, 4)


def element(alg):
    return st.lists(ints, min_size=alg.n, max_size=alg.n).map(alg.from_coords)


ALGS = [rank_one(), sym(2), sym(3)]


@pytest.mark.parametrize("alg", ALGS, ids=lambda a: f"{a.family}{a.r}")
@given(data=st.data())
@settings(max_examples=25)
def test_jordan_identity(alg, data):
    x, y = data.draw(element(alg)), data.draw(element(alg))
    x2 = jordan_mul(x, x)
    assert jordan_mul(jordan_mul(x, y), x2) == jordan_mul(x, jordan_mul(y, x2))


@pytest.mark.parametrize("alg", ALGS, ids=lambda a: f"{a.family}{a.r}")
@given(data=st.data())
@settings(max_examples=20)
def test_fundamental_quadratic_identity(alg, data):
    a, b, x = (data.draw(element(alg)) for _ in range(3))
    # P(P(a)b) = P(a) P(b) P(a)
    lhs = quad_apply(quad_apply(a, b), x)
    rhs = quad_apply(a, quad_apply(b, quad_apply(a, x)))
    assert lhs == rhs


@pytest.mark.parametrize("alg", ALGS, ids=lambda a: f"{a.family}{a.r}")
@given(data=st.data())
@settings(max_examples=20)
def test_determinant_under_quadratic_rep(alg, data):
    a, z = data.draw(element(alg)), data.draw(element(alg))
    assert det_delta(quad_apply(a, z)) == det_delta(a) ** 2 * det_delta(z)


@pytest.mark.parametrize("alg", ALGS, ids=lambda a: f"{a.family}{a.r}")
@given(data=st.data())
@settings(max_examples=20)
def test_inverse(alg, data):
    x = data.draw(element(alg))
    if det_delta(x).is_zero():
        return
    assert jordan_mul(x, inverse(x)) == alg.unit
    # P(x) x^{-1} = x
    assert quad_apply(x, inverse(x)) == x


def test_quad_rep_matches_action():
    alg = sym(2)
    a = alg.from_coords([1, 2, -1])
    z = alg.from_coords([3, 0, 5])
    assert apply_matrix(quad_rep(a), z) == quad_apply(a, z)


def test_quad_rep_on_diagonal_squares_eigenvalues():
    alg = sym(3)
    a = alg.diagonal([2, -1, 3])
    z = alg.diagonal([1, 1, 1])
    assert quad_apply(a, z) == alg.diagonal([4, 1, 9])


def test_trace_and_delta_polys_agree_with_elements():
    alg = sym(3)
    coords = [1, 2, 0, -1, 3, 2]
    x = alg.from_coords(coords)
    assert alg.delta_poly().evaluate(coords) == det_delta(x)
    assert alg.trace_poly().evaluate(coords) == trace(x)


def test_rank_one_is_the_complex_line():
    alg = rank_one()
    assert alg.n == 1
    assert det_delta(alg.from_coords([Scalar.i()])) == Scalar.i()


def test_classification_rows():
    assert jordan.classify("Skew(2r,C)")["g_R"] == "so*(4r)"
    assert jordan.classify("Herm(3,O)")["g_R"] == "e7(-25)"
    assert jordan.classify("C")["g"] == "sl(2,C)"
    assert len(jordan.classification_table()) == 6
    with pytest.raises(KeyError):
        jordan.classify("Quaternions")
