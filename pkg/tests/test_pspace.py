import json
from fractions import Fraction

import pytest

from minrep import pspace
from minrep.jordan import rank_one, sym
from minrep.poly import LaurentPoly, MultiPoly


@pytest.fixture(scope="module")
def sym2():
    return pspace.build_pspace(sym(2), seed=0)


def test_rank_one_grading():
    sp = pspace.build_pspace(rank_one())
    assert sp.grading_dims() == {0: 1, 1: 1, 2: 1}


def test_sym2_grading(sym2):
    # frozen from the translate-span construction
    assert sym2.grading_dims() == {0: 1, 1: 3, 2: 6, 3: 3, 4: 1}
    assert sym2.dim == 14


def test_sym3_grading():
    sp = pspace.build_pspace(sym(3))
    assert sp.grading_dims() == {0: 1, 1: 6, 2: 21, 3: 28, 4: 21, 5: 6, 6: 1}


def test_seed_does_not_change_the_span(sym2):
    other = pspace.build_pspace(sym(2), seed=7)
    assert other.grading_dims() == sym2.grading_dims()
    assert all(other.contains(b) for b in sym2.basis)


def test_q_is_in_span(sym2):
    assert sym2.contains(pspace.q_poly(sym(2)))
    assert not sym2.contains(MultiPoly.var(0, 3) ** 5)


def test_involution_and_closure(sym2):
    assert pspace.involution_holds(sym2)
    assert pspace.derivative_closure(sym2)
    assert pspace.translate_closure(sym2, [[1, -2, 3]])


def test_kappa_sigma_of_q_is_one():
    alg = sym(2)
    assert pspace.kappa_sigma(pspace.q_poly(alg), alg) == MultiPoly.constant(1, 3)


def test_tau_sigma_values():
    assert pspace.tau_sigma(rank_one()).to_text() == "-z1"
    assert pspace.tau_sigma(sym(2)).to_text() == "-z1^2*z3 + z1*z2^2 - z1*z3^2 + z2^2*z3"


def test_kappa_dilation_is_a_homomorphism(sym2):
    alg = sym(2)
    for b in sym2.grading[1]:
        twice = pspace.kappa_dilation(2, pspace.kappa_dilation(3, b, alg), alg)
        assert twice == pspace.kappa_dilation(6, b, alg)


def test_pi_sigma_intertwines_dilations():
    phi = LaurentPoly.monomial((2, -1)) + LaurentPoly.monomial((0, 3))
    left, right = pspace.intertwining_sides(phi, 2, Fraction(1, 4))
    assert left == right


def test_json_envelope(sym2):
    data = json.loads(sym2.to_json())
    assert data["grading_dims"] == {"0": 1, "1": 3, "2": 6, "3": 3, "4": 1}
    assert data["seed"] == 0
    assert len(data["basis"]) == 14


def test_rank_limit():
    with pytest.raises(ValueError):
        pspace.build_pspace(sym(4))


def test_budget_exhaustion():
    with pytest.raises(pspace.RankNotStable):
        pspace.build_pspace(sym(2), budget=3)
