from fractions import Fraction

import pytest

from minrep.fock import (ModelParams, basis_polys, dilation_covariance, operators, parity_preserved,
                         rho_E, rho_F, tau_matches_E, verify_form_equivariance, verify_sl2)
from minrep.poly import MultiPoly
from minrep.scalar import Scalar


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sl2_identities(r):
    recs = verify_sl2(ModelParams(r), 6)
    assert len(recs) == 6
    for rec in recs:
        assert rec["pass"], rec
        assert rec["residual_terms"] == 0


@pytest.mark.parametrize("r", [2, 3])
def test_statement_constants_break_the_bracket(r):
    recs = {x["identity"]: x for x in verify_sl2(ModelParams.statement_constants(r), 4)}
    assert not recs["[rhoE,rhoF] = kappa rhoH"]["pass"]
    assert recs["[rhoH,rhoE] = 2 rhoE"]["pass"]


def test_constants_by_rank():
    p = ModelParams(3)
    assert p.alpha == Fraction(1, 2)
    assert p.kappa == Fraction(-1, 2)
    assert p.k == -Scalar.s(2) / 4
    assert p.h_shift == Fraction(3, 2)
    one = ModelParams(1)
    assert one.k == Scalar.i() / 2 and one.kappa == 1 and one.h_shift == Fraction(1, 2)


def test_rho_E_frozen():
    p = ModelParams(3)
    assert rho_E(p, MultiPoly.monomial((1, 0, 0))).to_text() == \
        "-1/4*s*z1^3 - 1/4*s*z1*z2^2 - 1/4*s*z1*z3^2"
    assert rho_F(p, MultiPoly.monomial((2, 0, 0))).to_text() == "-1/2*s"


@pytest.mark.parametrize("r", [1, 2])
def test_degree_shifts_and_parity(r):
    p = ModelParams(r)
    ops = operators(p)
    basis = basis_polys(r, 4, p.d)
    assert all(parity_preserved(ops[x], basis) for x in "HEF")
    src, tgt, mat = ops["E"].matrix(r, 2)
    assert len(src) == len(list(basis_polys(r, 2))) - len(list(basis_polys(r, 1)))
    with pytest.raises(ValueError):
        (ops["E"] + ops["F"])


def test_form_equivariance_and_tau():
    p = ModelParams(2)
    assert all(x["pass"] for x in verify_form_equivariance(p, [1, Fraction(1, 2)], 4))
    assert tau_matches_E(p)


def test_dilation_covariance():
    assert dilation_covariance(ModelParams(2), Fraction(3), 4)
    assert dilation_covariance(ModelParams(1), Scalar.i(), 4)


def test_degree_cap_minimum():
    with pytest.raises(ValueError):
        verify_sl2(ModelParams(1), 1)
