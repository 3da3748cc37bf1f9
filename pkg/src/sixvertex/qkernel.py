"""Scalar q-arithmetic kernel.

Complex q-powers, q-numbers, the six-vertex weight functions, the series
lambda2 and its representation-weighted sum, central-element images and the
closed-form traces over the finite-dimensional and Verma families.  Everything
here is a pure function of its arguments.
"""
from __future__ import annotations

import cmath

from .errors import DivergentSeries, SingularTwist
from .params import ModelParams, as_exponent

#: hard cap on series terms for lambda2
SERIES_CAP = 100_000


def qpow(x, params: ModelParams) -> complex:
    """q^x as the complex number exp(hbar*x)."""
    return cmath.exp(params.hbar * complex(x))


def _qnum_t(nu: complex, t: complex) -> complex:
    """sinh(t*nu)/sinh(t), continued through zeros of the denominator."""
    den = cmath.sinh(t)
    if abs(den) < 1e-12:
        # analytic limit across sinh(t) = 0 (covers t -> 0 and t -> i*pi*k)
        return nu * cmath.cosh(t * nu) / cmath.cosh(t)
    return cmath.sinh(t * nu) / den


def qnum(nu, params: ModelParams) -> complex:
    """The q-number [nu]_q = (q^nu - q^-nu)/(q - q^-1), continuous in nu."""
    return _qnum_t(complex(nu), params.hbar)


def qnum_base(nu, base_exponent, params: ModelParams) -> complex:
    """[nu]_w for w = q^base_exponent, with the w -> +-1 limits taken."""
    return _qnum_t(complex(nu), params.hbar * complex(base_exponent))


def weights(u, params: ModelParams):
    """Six-vertex weight functions (a, b, c) at zeta = q^u.

    a = q*zeta - zeta^-1/q = 2 sinh(hbar*(u+1)),  b = 2 sinh(hbar*u),
    c = 2 sinh(hbar).
    """
    ue = as_exponent(u)
    h = params.hbar
    return (
        2.0 * cmath.sinh(h * (ue + 1.0)),
        2.0 * cmath.sinh(h * ue),
        2.0 * cmath.sinh(h),
    )


def lambda2(z, params: ModelParams) -> complex:
    """Sum of z^k / (k * (q^k + q^-k)) over k >= 1, for |z| < 1.

    The partial sum stops once the geometric tail bound drops below
    ``params.tol_series``; raises DivergentSeries outside the open unit disk
    or if the cap is hit first.
    """
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise DivergentSeries(f"lambda2 series needs |z| < 1, got |z| = {r:.6g}")
    h = params.hbar
    total = 0.0 + 0.0j
    zk = 1.0 + 0.0j
    cutoff = params.tol_series * (1.0 - r)
    for k in range(1, SERIES_CAP + 1):
        zk *= z
        term = zk / (k * 2.0 * cmath.cosh(k * h))
        total += term
        if abs(term) <= cutoff:
            return total
    raise DivergentSeries("lambda2 series cap exceeded")


def lambda_rep(mu, z, params: ModelParams) -> complex:
    """Weight-mu sum lambda2(q^(mu+1)*z) + lambda2(q^(-mu-1)*z)."""
    mu = complex(mu)
    zp = qpow(mu + 1.0, params) * complex(z)
    zm = qpow(-mu - 1.0, params) * complex(z)
    if abs(zp) >= 1.0 or abs(zm) >= 1.0:
        raise DivergentSeries("lambda_rep arguments leave the unit disk")
    return lambda2(zp, params) + lambda2(zm, params)


def casimir_image(k: int, mu, params: ModelParams) -> complex:
    """Image of the k-th central element at weight mu: q^{k(mu+1)} + q^{-k(mu+1)}."""
    if k < 1:
        raise ValueError("central-element index k must be >= 1")
    return 2.0 * cmath.cosh(k * params.hbar * (complex(mu) + 1.0))


def trace_finite_monomial(m: int, rE: int, rF: int, sC: int, nu, params: ModelParams) -> complex:
    """Trace of E^rE F^rF C^sC q^{nu H} over the (m+1)-dimensional module.

    Vanishes unless rE = rF = 0; otherwise equals
    (q^{m+1} + q^{-m-1})^sC * [m+1]_{q^nu}, with the q^nu -> 1 limit taken.
    """
    if m < 0 or rE < 0 or rF < 0 or sC < 0:
        raise ValueError("monomial exponents must be non-negative")
    if rE > 0 or rF > 0:
        return 0.0 + 0.0j
    return casimir_image(1, m, params) ** sC * _qnum_t(m + 1, params.hbar * complex(nu))


def trace_verma_monomial(mu, rE: int, rF: int, sC: int, nu, params: ModelParams) -> complex:
    """Twisted trace of E^rE F^rF C^sC q^{nu H} over the weight-mu Verma module.

    Closed form (q^{mu+1} + q^{-mu-1})^sC * q^{mu*nu} / (1 - q^{-2 nu}),
    used as the analytic continuation for every nu with q^{-2 nu} != 1.
    """
    if rE < 0 or rF < 0 or sC < 0:
        raise ValueError("monomial exponents must be non-negative")
    if rE > 0 or rF > 0:
        return 0.0 + 0.0j
    nu = complex(nu)
    den = 1.0 - qpow(-2.0 * nu, params)
    if abs(den) < 1e-13:
        raise SingularTwist("Verma trace pole: q^(-2 nu) = 1")
    return casimir_image(1, mu, params) ** sC * qpow(complex(mu) * nu, params) / den
