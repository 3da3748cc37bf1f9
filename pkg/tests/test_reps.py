import numpy as np
import pytest

from sixvertex.params import ModelParams
from sixvertex.qkernel import qpow
from sixvertex.reps import rep_finite, rep_fock, rep_verma

P = ModelParams()


def commutator(A, B):
    return A @ B - B @ A


def test_finite_m1_explicit():
    rep = rep_finite(1, P)
    nu = 0.37
    assert np.allclose(rep.qH(nu), np.diag([qpow(nu, P), qpow(-nu, P)]), atol=1e-15)
    assert np.array_equal(rep.E, np.array([[0, 1], [0, 0]], dtype=complex))
    assert np.array_equal(rep.F, np.array([[0, 0], [1, 0]], dtype=complex))


def test_finite_m0_trivial():
    rep = rep_finite(0, P)
    assert rep.dim == 1
    assert rep.E[0, 0] == 0 and rep.F[0, 0] == 0
    assert rep.qH(1.7)[0, 0] == 1.0


def test_finite_commutation_relation_exact():
    rep = rep_finite(2, P)
    rhs = (rep.qH(1.0) - rep.qH(-1.0)) / P.kappa
    assert np.abs(commutator(rep.E, rep.F) - rhs).max() < 1e-14


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_finite_casimir_scalar(m):
    rep = rep_finite(m, P)
    cas = qpow(-1, P) * rep.qH(1.0) + qpow(1, P) * rep.qH(-1.0) + P.kappa**2 * rep.E @ rep.F
    val = qpow(m + 1, P) + qpow(-m - 1, P)
    assert np.abs(cas - val * np.eye(m + 1)).max() < 1e-13


def test_verma_integer_weight_contains_finite_block():
    m, D = 2, 10
    v = rep_verma(m, D, P)
    f = rep_finite(m, P)
    assert np.abs(v.E[: m + 1, : m + 1] - f.E).max() < 1e-15
    assert np.abs(v.qH(0.3)[: m + 1, : m + 1] - f.qH(0.3)).max() < 1e-15


def test_verma_casimir_interior():
    mu, D = 0.8, 16
    rep = rep_verma(mu, D, P)
    cas = qpow(-1, P) * rep.qH(1.0) + qpow(1, P) * rep.qH(-1.0) + P.kappa**2 * rep.E @ rep.F
    val = qpow(mu + 1, P) + qpow(-mu - 1, P)
    delta = np.abs(cas - val * np.eye(D))
    # exact on rows 0..D-2 relative to the q^{-H} growth of the intermediates
    rowscale = np.maximum(1.0, np.maximum(np.abs(np.diag(rep.qH(1.0))), np.abs(np.diag(rep.qH(-1.0)))))
    assert (delta[: D - 1, : D - 1] / rowscale[: D - 1, None]).max() < 1e-13


def test_verma_commutator_interior():
    mu, D = 0.8, 40
    rep = rep_verma(mu, D, P)
    rhs = (rep.qH(1.0) - rep.qH(-1.0)) / P.kappa
    delta = np.abs(commutator(rep.E, rep.F) - rhs)
    rowscale = np.maximum(1.0, np.maximum(np.abs(np.diag(rep.qH(1.0))), np.abs(np.diag(rep.qH(-1.0)))))
    assert (delta[: D - 1, : D - 1] / rowscale[: D - 1, None]).max() < 1e-13
    # the boundary row really is truncated
    assert delta[D - 1, D - 1] / rowscale[D - 1] > 0.01


def test_fock_plus_relations():
    D = 12
    rep = rep_fock("plus", D, P)
    nu = 0.9
    assert np.abs(rep.qN(nu) - np.diag([qpow(nu * k, P) for k in range(D)])).max() < 1e-14
    lhs = rep.bdag @ rep.b
    rhs = (rep.qN(1.0) - rep.qN(-1.0)) / P.kappa
    assert np.abs((lhs - rhs)[: D - 1, : D - 1]).max() < 1e-13


def test_fock_minus_relations():
    D = 12
    rep = rep_fock("minus", D, P)
    nu = 0.9
    assert np.abs(rep.qN(nu) - np.diag([qpow(-nu * (k + 1), P) for k in range(D)])).max() < 1e-14
    lhs = rep.b @ rep.bdag
    rhs = (qpow(1, P) * rep.qN(1.0) - qpow(-1, P) * rep.qN(-1.0)) / P.kappa
    assert np.abs((lhs - rhs)[: D - 1, : D - 1]).max() < 1e-13


def test_fock_ladder_shapes():
    rep = rep_fock("plus", 6, P)
    # b-dagger raises the level index, b lowers it
    assert rep.bdag[1, 0] == 1.0
    assert abs(rep.b[0, 1] - 1.0) < 1e-15
    repm = rep_fock("minus", 6, P)
    assert repm.b[1, 0] == 1.0
    assert abs(repm.bdag[0, 1] + 1.0) < 1e-15
