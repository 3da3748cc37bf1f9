import cmath

import numpy as np
import pytest

from sixvertex.bethe import (
    BetheState,
    bethe_residual,
    bethe_solve,
    bethe_solve_all,
    eigenvalue_lambda,
    theta_check,
)
from sixvertex.errors import PoleCollision
from sixvertex.params import ChainSpec, ModelParams
from sixvertex.qkernel import qpow
from sixvertex.transfer import sector_indices, transfer_p

P = ModelParams()
CH1 = ChainSpec.homogeneous(1)
CH2 = ChainSpec.homogeneous(2)
CH3 = ChainSpec.homogeneous(3)


def closed_form_root_n1():
    # q^(2 phi) a(z)/b(z) = 1  =>  z^2 = (q^(2 phi - 1) - 1)/(q^(2 phi + 1) - 1)
    z2 = (qpow(2 * P.phi - 1, P) - 1.0) / (qpow(2 * P.phi + 1, P) - 1.0)
    return cmath.log(cmath.sqrt(z2)) / P.hbar


def test_empty_sector():
    st = bethe_solve(0, CH2, P)
    assert st.p == 0 and st.roots == () and st.residual == 0.0
    assert bethe_residual(st, CH2, P) == 0.0
    assert theta_check(0.3, st, CH2, P) < 1e-14


def test_n1_closed_form_root():
    w = closed_form_root_n1()
    st = BetheState(1, (w,), 0.0, -0.5)
    assert bethe_residual(st, CH1, P) <= 1e-12
    solved = bethe_solve(1, CH1, P)
    assert solved.residual <= 1e-12
    # same eigenvalue as the closed-form root
    lam_closed = eigenvalue_lambda(0.45, st, CH1, P)
    lam_solved = eigenvalue_lambda(0.45, solved, CH1, P)
    assert abs(lam_closed - lam_solved) <= 1e-12 * abs(lam_closed)


def test_n1_eigenvalue_is_transfer_entry():
    w = closed_form_root_n1()
    st = BetheState(1, (w,), 0.0, -0.5)
    u = 0.45
    lam = eigenvalue_lambda(u, st, CH1, P)
    T = transfer_p(1, u, CH1, P)
    assert abs(lam - T[1, 1]) < 1e-12
    assert theta_check(u, st, CH1, P) <= 1e-10


def test_p0_eigenvalue_formula():
    st = bethe_solve(0, CH2, P)
    u = 0.45
    lam = eigenvalue_lambda(u, st, CH2, P)
    T = transfer_p(1, u, CH2, P)
    assert abs(lam - T[0, 0]) < 1e-12  # all-up state is the p=0 eigenvector


def test_n2_p1_closed_form():
    # a(z)/b(z) = +-q^{-phi}  =>  z^2 = (1/q -+ q^{-phi})/(q -+ q^{-phi})
    states = bethe_solve_all(1, CH2, P)
    assert len(states) == 2
    z2s = sorted(
        (cmath.exp(2 * P.hbar * st.roots[0]).real for st in states)
    )
    expect = sorted(
        ((1 / 0.6 - sgn * qpow(-P.phi, P).real) / (0.6 - sgn * qpow(-P.phi, P).real) for sgn in (+1, -1))
    )
    assert np.allclose(z2s, expect, rtol=1e-9)
    for st in states:
        assert st.residual <= 1e-10


@pytest.mark.parametrize("chain", [CH1, CH2, CH3])
def test_lambda_subset_of_spectrum(chain):
    rng = np.random.default_rng(5)
    upts = rng.uniform(-0.8, 0.8, size=5)
    for p in range(chain.n + 1):
        states = bethe_solve_all(p, chain, P)
        assert states, f"no Bethe states found in sector p={p}"
        ix = sector_indices(chain.n, p)
        for u in upts:
            T = transfer_p(1, u, chain, P)
            evals = np.linalg.eigvals(T[np.ix_(ix, ix)])
            for st in states:
                lam = eigenvalue_lambda(u, st, chain, P)
                gap = np.min(np.abs(evals - lam)) / max(1.0, abs(lam))
                assert gap <= 1e-8


def test_theta_identity_solved_roots():
    for chain, tol in ((CH2, 1e-9), (CH3, 1e-9)):
        for p in range(1, chain.n + 1):
            for st in bethe_solve_all(p, chain, P):
                assert theta_check(0.45, st, chain, P) <= tol


def test_commuting_transfer_pair():
    # eigenvectors are u-independent: transfer matrices at two points commute
    A = transfer_p(1, 0.2, CH3, P)
    B = transfer_p(1, 0.9, CH3, P)
    assert np.abs(A @ B - B @ A).max() <= 1e-12 * np.abs(A @ B).max()


def test_pole_guards():
    w = closed_form_root_n1()
    st = BetheState(1, (w,), 0.0, -0.5)
    with pytest.raises(PoleCollision):
        eigenvalue_lambda(w, st, CH1, P)  # evaluation at the root itself
    twin = BetheState(2, (w, w), 0.0, 0.0)
    with pytest.raises(PoleCollision):
        bethe_residual(twin, CH2, P)


def test_inhomogeneous_solve():
    chain = ChainSpec(2, (0.15, -0.1))
    states = bethe_solve_all(1, chain, P)
    assert states
    u = 0.4
    T = transfer_p(1, u, chain, P)
    ix = sector_indices(2, 1)
    evals = np.linalg.eigvals(T[np.ix_(ix, ix)])
    for st in states:
        lam = eigenvalue_lambda(u, st, chain, P)
        assert np.min(np.abs(evals - lam)) <= 1e-9 * max(1.0, abs(lam))
