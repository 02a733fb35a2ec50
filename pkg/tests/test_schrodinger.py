from fractions import Fraction

import pytest
import sympy as sp

from minrep import schrodinger as S
from minrep.fock import ModelParams
from minrep.scalar import Scalar


def test_gauss_moments():
    assert S.real_gauss_moment(0) == Scalar.pi(Fraction(1, 2))
    assert S.real_gauss_moment(4) == Scalar.pi(Fraction(1, 2)) * Fraction(3, 4)
    assert S.real_gauss_moment(3) == 0
    assert S.double_factorial(7) == 105


@pytest.mark.parametrize("r", [1, 2])
def test_schrodinger_sl2(r):
    assert all(x["pass"] for x in S.schrodinger_sl2(ModelParams(r), 5))


def test_l2_skew_by_rank():
    assert S.check_l2_skew(ModelParams(1), 4)["pass"]
    two = S.check_l2_skew(ModelParams(2), 3)
    assert not two["pass"]
    assert two["E"]["symmetric"] and two["F"]["symmetric"]


def test_bargmann_of_gaussian():
    img = S.bargmann(S.PAPER_KERNEL, S.GaussPoly.gaussian(1))
    assert img.to_text() == "(pi^(1/2))*exp((1/4)*tau(z^2))"


def test_divergent_kernel():
    with pytest.raises(S.DivergentKernel):
        S.bargmann(S.KernelParams(0, 1, Fraction(1, 2)), S.GaussPoly.gaussian(1))


def test_paper_kernel_does_not_intertwine():
    rep = S.check_intertwine(ModelParams(1), S.PAPER_KERNEL, 4)
    assert not rep["pass"]
    assert {x: v["failing_inputs"] for x, v in rep["per_operator"].items()} == {"H": 5, "E": 5, "F": 5}


def test_solved_rank_one_kernel():
    s2 = Scalar.s(2)
    kern = S.KernelParams(Fraction(1, 2), Scalar.i(2) * s2, Fraction(-1, 2))
    assert kern.gamma == 1 and kern.lam == 0
    assert S.check_intertwine(ModelParams(1), kern, 6)["pass"]


def test_solver_rank_two():
    out = S.solve_and_verify(ModelParams(2), cap=4)
    got = {(s["a"], s["b"], s["c0"]) for s in out["verified_solutions"]}
    assert ("I/4", "sqrt(2)/2", "-I/4") in got
    assert len(got) == 4


def test_bridge():
    assert S.Sl2Bridge(Fraction(-1, 4)).preserves_brackets()
    assert S.Sl2Bridge(1, literal=True).preserves_brackets()
    assert not S.Sl2Bridge(Fraction(-1, 4), literal=True).preserves_brackets()
    assert S.Sl2Bridge(Fraction(-1, 4)).real_form_identity()


def test_sympy_round_trip():
    x = Scalar(Fraction(1, 3), 2) + Scalar.i(2) * Scalar.s(2)
    assert S.sympy_to_scalar(S.scalar_to_sympy(x)) == x
    with pytest.raises(S.NotRepresentable):
        S.sympy_to_scalar(sp.sqrt(2) + sp.sqrt(3))


def test_golden_operators():
    printed, machine = S.printed_golden_operators(), S.machine_golden_operators()
    for name in ("AdH", "E+F", "i(E-F)", "iH"):
        assert printed[name] == machine[name]
    assert printed["AdE"] != machine["AdE"]
    assert not any(S.oscillator_brackets(machine).values())
    assert all(S.oscillator_brackets(printed).values())
