import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minrep import norms
from minrep.fock import ModelParams
from minrep.scalar import Scalar


def test_moment_values():
    assert norms.bergman_moment((0,), 2, 1) == Scalar.pi()
    assert norms.bergman_moment((1, 0), 5, 2) == Scalar.pi(2) / 24
    assert norms.a_value(3, 2) == Scalar.pi(2) / 20
    with pytest.raises(norms.DivergentMoment):
        norms.bergman_moment((1,), 2, 1)


@given(st.integers(0, 12), st.integers(1, 4))
def test_a_closed_form(d, r):
    assert norms.a_value(d, r) == norms.a_closed(d, r)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_c_sequence(r):
    seq = norms.solve_c_sequence(r, 5)
    for m in range(6):
        assert seq.c_m(m, 0) == Fraction(1, math.factorial(2 * m))
        assert seq.c_m(m, 1) == Fraction(1, math.factorial(2 * m + 1))


def test_skew_adjoint_rank_one():
    for d in range(5):
        assert norms.check_skew_adjoint(ModelParams(1), *divmod(d, 2))["pass"]


def test_skew_adjoint_sign_rank_two():
    rec = norms.check_skew_adjoint(ModelParams(2), 0, 0)
    assert not rec["pass"] and rec["holds_with_plus_sign"]
    first = rec["nonzero_pairs"][0]
    assert (first["phi"], first["phi_prime"], first["lhs"], first["rhs"]) == ("1", "z1^2", "-1/2", "1/2")


@pytest.mark.parametrize("r", [1, 2])
def test_kernel_reproduces(r):
    w = [Fraction(1, 3)] + [Scalar.i()] * (r - 1)
    for d in range(5):
        assert norms.kernel_reproduce(r, *divmod(d, 2), w)["pass"]


def test_wrong_kernel_power_fails():
    # H^3 against the degree-2 weight does not reproduce
    K = norms.kernel_poly([Fraction(1, 2)], 1, 3)
    f = norms.MultiPoly.monomial((1,))
    assert norms.bergman_pair(f, K, 2, 1) != Fraction(1, 2)


def test_full_kernel_certificate():
    cert = norms.full_kernel_certificate(1, 4, [Fraction(1, 2)])
    assert cert["pass"] and cert["homogeneous_kernel_exp_H_minus_1_reproduces"]
    assert cert["truncated_series_ratio"][0] == "65/24"


@pytest.mark.parametrize("r", [1, 2])
def test_fock_ratio(r):
    rec = norms.fock_norm_ratio(r, 6)
    assert rec["constant"]
    assert rec["ratio"] == str(Scalar.pi(r))


def test_phase_invariance():
    assert norms.phase_invariant([1, Scalar.i()], Scalar.i())
    with pytest.raises(ValueError):
        norms.phase_invariant([1], 2)


@pytest.mark.parametrize("k,N,r", [((0,), 2, 1), ((2,), 5, 1), ((1, 0), 4, 2), ((1, 1, 0), 7, 3)])
def test_monte_carlo_oracle(k, N, r):
    exact = norms.bergman_moment(k, N, r).to_complex().real
    est = norms.bergman_moment_mc(k, N, r, samples=400_000, seed=1)
    assert abs(est / exact - 1) < 0.01


def test_gauss_moment_mc():
    exact = norms.gauss_moment((2, 1), (2, 1), 2).to_complex().real
    assert abs(norms.gauss_moment_mc((2, 1), 2, 400_000, 0) / exact - 1) < 0.01
