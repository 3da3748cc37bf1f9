import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixvertex.errors import DivergentSeries, SingularTwist
from sixvertex.params import ModelParams
from sixvertex.qkernel import (
    casimir_image,
    lambda2,
    lambda_rep,
    qnum,
    qpow,
    trace_finite_monomial,
    trace_verma_monomial,
    weights,
)
from sixvertex.reps import rep_finite

P = ModelParams()

moderate = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)


def test_qpow_trivials():
    assert qpow(0.0, P) == 1.0
    assert abs(qpow(1.0, P) - 0.6) < 1e-15
    # x = -2*phi with phi = -3 is q^6
    assert abs(qpow(-2.0 * P.phi, P) - 0.6**6) < 1e-15
    assert abs(qpow(-2.0 * P.phi, P) - 0.046656) < 1e-12


@given(x=moderate, y=moderate, xi=moderate, yi=moderate)
@settings(max_examples=200, deadline=None)
def test_qpow_additive(x, y, xi, yi):
    z1 = complex(x, xi)
    z2 = complex(y, yi)
    lhs = qpow(z1 + z2, P)
    rhs = qpow(z1, P) * qpow(z2, P)
    assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(lhs))


def test_qnum_values():
    assert qnum(0.0, P) == 0.0
    assert abs(qnum(1.0, P) - 1.0) < 1e-15
    half = ModelParams(hbar=math.log(0.5))
    assert abs(qnum(3.0, half) - 5.25) < 1e-13


@given(nu=moderate)
@settings(max_examples=100, deadline=None)
def test_qnum_antisymmetric_and_base_inversion(nu):
    assert abs(qnum(-nu, P) + qnum(nu, P)) < 1e-13
    inv = ModelParams(hbar=-P.hbar)  # q -> 1/q
    assert abs(qnum(nu, inv) - qnum(nu, P)) < 1e-12


def test_weights_special_points():
    a, b, c = weights(0.0, P)
    assert b == 0.0
    assert abs(a - P.kappa) < 1e-15
    assert abs(c - P.kappa) < 1e-15
    a, _, _ = weights(-1.0, P)
    assert abs(a) < 1e-15


def test_lambda2_zero_and_divergence():
    assert lambda2(0.0, P) == 0.0
    with pytest.raises(DivergentSeries):
        lambda2(1.0, P)
    with pytest.raises(DivergentSeries):
        lambda2(1.2 + 0.3j, P)


def test_lambda2_against_direct_summation():
    # 200-term direct evaluation at zeta = 0.25, q = 0.6
    z, q = 0.25, 0.6
    direct = sum(z**k / (k * (q**k + q ** (-k))) for k in range(1, 201))
    assert abs(lambda2(z, P) - direct) < 1e-14


def test_lambda2_shift_identity():
    # lambda2(q z) + lambda2(z/q) = -log(1 - z)
    z = 0.3
    lhs = lambda2(0.6 * z, P) + lambda2(z / 0.6, P)
    assert abs(lhs + cmath.log(1 - z)) < 1e-12


def test_lambda2_shift_identity_on_grid():
    for r in (0.1, 0.3, 0.5, 0.8):
        for k in range(8):
            z = r * cmath.exp(2j * math.pi * k / 8)
            if abs(z / 0.6) >= 1.0:
                continue
            lhs = lambda2(0.6 * z, P) + lambda2(z / 0.6, P)
            assert abs(lhs + cmath.log(1 - z)) < 1e-10


def test_casimir_image_values():
    mu = 0.7 + 0.2j
    assert abs(casimir_image(1, mu, P) - (qpow(mu + 1, P) + qpow(-mu - 1, P))) < 1e-14
    for k in range(1, 6):
        assert abs(casimir_image(k, -1.0, P) - 2.0) < 1e-14


def test_casimir_generating_function():
    # sum_k (-1)^(k-1) c_k x^-k / k = log(1 + c_1 x^-1 + x^-2)
    mu, x = 0.45, 5.0
    acc = sum((-1) ** (k - 1) * casimir_image(k, mu, P) * x ** (-k) / k for k in range(1, 31))
    direct = cmath.log(1 + casimir_image(1, mu, P) / x + x**-2)
    assert abs(acc - direct) < 1e-12


def test_lambda_rep():
    assert lambda_rep(0.7, 0.0, P) == 0.0
    # weight-1 value decomposes into the two shifted series
    z = 0.2
    direct = lambda2(qpow(2, P) * z, P) + lambda2(qpow(-2, P) * z, P)
    assert abs(lambda_rep(1.0, z, P) - direct) < 1e-14
    with pytest.raises(DivergentSeries):
        lambda_rep(1.0, 0.5, P)  # q^-2 * 0.5 > 1


def test_lambda_rep_shift_identity():
    # Lambda(q z) + Lambda(z/q) = -log(1 - C z + z^2)
    mu, z = 0.7, 0.1
    lhs = lambda_rep(mu, 0.6 * z, P) + lambda_rep(mu, z / 0.6, P)
    rhs = -cmath.log(1 - casimir_image(1, mu, P) * z + z * z)
    assert abs(lhs - rhs) < 1e-12


def test_trace_finite_monomial():
    # one-dimensional module: C acts as q + 1/q, q^{nu H} as 1
    assert abs(trace_finite_monomial(0, 0, 0, 1, 0.3, P) - (0.6 + 1 / 0.6)) < 1e-14
    assert trace_finite_monomial(2, 1, 0, 0, 0.3, P) == 0.0
    assert trace_finite_monomial(2, 0, 3, 1, 0.3, P) == 0.0
    # against an explicit 4x4 matrix trace
    rep = rep_finite(3, P)
    direct = np.trace(rep.qH(0.5))
    assert abs(trace_finite_monomial(3, 0, 0, 0, 0.5, P) - direct) < 1e-13
    # q^nu -> 1 limit
    assert abs(trace_finite_monomial(3, 0, 0, 0, 0.0, P) - 4.0) < 1e-12


def test_trace_verma_monomial():
    assert trace_verma_monomial(0.8, 0, 2, 0, -2.0, P) == 0.0
    mu, nu = 0.8, -2.0
    val = trace_verma_monomial(mu, 0, 0, 0, nu, P)
    assert abs(val - qpow(mu * nu, P) / (1 - qpow(-2 * nu, P))) < 1e-14
    # truncated-sum oracle, valid since |q^(-2 nu)| < 1 here
    direct = sum(qpow(nu * (mu - 2 * k), P) for k in range(80))
    assert abs(val - direct) < 1e-10
    with pytest.raises(SingularTwist):
        trace_verma_monomial(0.8, 0, 0, 0, 0.0, P)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_trace_subtraction_consistency(m):
    # tr over the finite module = Verma trace at mu = m minus at mu = -m-2
    for nu in (0.5, -0.5, 1.3, -1.3):
        for sC in (0, 1, 2):
            diff = trace_verma_monomial(m, 0, 0, sC, nu, P) - trace_verma_monomial(
                -m - 2, 0, 0, sC, nu, P
            )
            fin = trace_finite_monomial(m, 0, 0, sC, nu, P)
            assert abs(diff - fin) <= 1e-11 * max(1.0, abs(fin))
