"""Bethe-equation solver and eigenvalue reconstruction.

The equations are solved in log form on the root exponents w_m (zeta_m =
q^{w_m}), where every weight function is a hyperbolic sine of an exponent
difference and the equation defect is reduced mod 2*pi*i.  That removes both
the sign-branch ambiguity and the pole blow-ups from the Newton step.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, PoleCollision
from .params import ChainSpec, ModelParams, as_exponent

_TWO_PI = 2.0 * math.pi
_MAX_ITER = 200
_POLE_EPS = 1e-12


@dataclass(frozen=True)
class BetheState:
    """A solved magnon configuration: root exponents and the equation defect."""

    p: int
    roots: tuple
    residual: float
    sector: float


def _wrap(z: complex) -> complex:
    """Reduce the imaginary part into (-pi, pi]."""
    return complex(z.real, z.imag - _TWO_PI * math.floor(z.imag / _TWO_PI + 0.5))


def _log_sinh(z: complex) -> complex:
    """log(2 sinh z), up to multiples of 2*pi*i (asymptotic form for large |Re z|)."""
    if z.real > 20.0:
        return z
    if z.real < -20.0:
        return -z + 1j * math.pi
    s = 2.0 * cmath.sinh(z)
    if abs(s) < _POLE_EPS:
        raise PoleCollision("weight-function zero hit while evaluating Bethe equations")
    return cmath.log(s)


def _defects(w: np.ndarray, chain: ChainSpec, params: ModelParams) -> np.ndarray:
    """Wrapped log-form defects, one per equation."""
    h = params.hbar
    p = len(w)
    out = np.empty(p, dtype=complex)
    const = 2.0 * params.phi * h - 1j * math.pi * (p + 1)
    for m in range(p):
        g = const
        for v in chain.v:
            g += _log_sinh(h * (w[m] - v + 1.0)) - _log_sinh(h * (w[m] - v))
        for l in range(p):
            if l == m:
                continue
            g -= _log_sinh(h * (w[m] - w[l] + 1.0)) - _log_sinh(h * (w[l] - w[m] + 1.0))
        out[m] = _wrap(g)
    return out


def _jacobian(w: np.ndarray, chain: ChainSpec, params: ModelParams) -> np.ndarray:
    h = params.hbar
    p = len(w)
    jac = np.zeros((p, p), dtype=complex)
    for m in range(p):
        diag = 0.0 + 0.0j
        for v in chain.v:
            diag += 1.0 / cmath.tanh(h * (w[m] - v + 1.0)) - 1.0 / cmath.tanh(h * (w[m] - v))
        for l in range(p):
            if l == m:
                continue
            cp = 1.0 / cmath.tanh(h * (w[m] - w[l] + 1.0))
            cm = 1.0 / cmath.tanh(h * (w[l] - w[m] + 1.0))
            diag -= cp + cm
            jac[m, l] = (cp + cm) * h
        jac[m, m] = diag * h
    return jac


def bethe_residual(state: BetheState, chain: ChainSpec, params: ModelParams) -> float:
    """max_m |LHS_m / RHS_m - 1| evaluated through the wrapped log defect."""
    if state.p == 0:
        return 0.0
    w = np.array(state.roots, dtype=complex)
    _check_distinct(w, params)
    g = _defects(w, chain, params)
    return float(np.max(np.abs(np.exp(g) - 1.0)))


def _check_distinct(w: np.ndarray, params: ModelParams):
    for m in range(len(w)):
        for l in range(m + 1, len(w)):
            if abs(cmath.exp(params.hbar * w[m]) - cmath.exp(params.hbar * w[l])) < 1e-8:
                raise PoleCollision("coinciding Bethe roots")


def _newton(w0: np.ndarray, chain: ChainSpec, params: ModelParams):
    w = w0.astype(complex).copy()
    g = _defects(w, chain, params)
    norm = np.max(np.abs(g))
    for _ in range(_MAX_ITER):
        if norm < 1e-13:
            return w
        step = np.linalg.solve(_jacobian(w, chain, params), -g)
        lam = 1.0
        while lam > 2.0**-14:
            try:
                g_new = _defects(w + lam * step, chain, params)
            except (PoleCollision, OverflowError):
                lam /= 2.0
                continue
            if np.max(np.abs(g_new)) < norm:
                break
            lam /= 2.0
        else:
            raise NoConvergence("damped Newton step stalled")
        w = w + lam * step
        g = g_new
        norm = np.max(np.abs(g_new))
    raise NoConvergence("Bethe Newton iteration cap reached")


def _seed_list(p: int, n_seeds: int):
    """Deterministic multi-start initializations near zeta = 1, offset by q^(1/2)."""
    seeds = []
    if p >= 1:
        seeds.append(0.5 + 0.6 * (np.arange(p) - (p - 1) / 2.0) + 0j)
        seeds.append(0.5 + 0.4 * np.exp(2j * math.pi * (np.arange(p) + 0.25) / p))
    for j in range(max(0, n_seeds - len(seeds))):
        rng = np.random.default_rng(911 + 131 * j)
        seeds.append(0.5 + rng.uniform(-2.4, 1.8, p) + 1j * rng.uniform(-0.9, 0.9, p))
    return seeds[:n_seeds]


def bethe_solve(p: int, chain: ChainSpec, params: ModelParams, init=None) -> BetheState:
    """Solve the p-magnon equations; returns the first converged root set."""
    if p < 0 or p > chain.n:
        raise ValueError("magnon number must satisfy 0 <= p <= n")
    if p == 0:
        return BetheState(0, (), 0.0, chain.n / 2.0)
    if init is not None:
        w = _newton(np.array([as_exponent(x) for x in init], dtype=complex), chain, params)
        return _finish(w, p, chain, params)
    last = None
    for w0 in _seed_list(p, 8):
        try:
            w = _newton(np.asarray(w0, dtype=complex), chain, params)
            return _finish(w, p, chain, params)
        except (NoConvergence, PoleCollision, np.linalg.LinAlgError) as exc:
            last = exc
    raise NoConvergence(f"no Bethe solution found for p={p}: {last}")


def _finish(w: np.ndarray, p: int, chain: ChainSpec, params: ModelParams) -> BetheState:
    _check_distinct(w, params)
    state = BetheState(p, tuple(complex(x) for x in w), 0.0, chain.n / 2.0 - p)
    res = bethe_residual(state, chain, params)
    if res > params.tol_check:
        raise NoConvergence(f"Bethe residual {res:.3e} above tolerance")
    return BetheState(p, state.roots, res, state.sector)


def bethe_solve_all(p: int, chain: ChainSpec, params: ModelParams, n_seeds: int = 8):
    """All distinct solutions reached from the deterministic seed list.

    Distinctness is judged on the reconstructed eigenvalue at two probe
    points, which identifies root sets related by symmetries of the
    equations.
    """
    if p == 0:
        return [BetheState(0, (), 0.0, chain.n / 2.0)]
    found = []
    fingerprints = []
    probes = (0.21, -0.43)
    for w0 in _seed_list(p, n_seeds):
        try:
            w = _newton(np.asarray(w0, dtype=complex), chain, params)
            state = _finish(w, p, chain, params)
            key = tuple(
                (round(z.real, 7), round(z.imag, 7))
                for z in (eigenvalue_lambda(x, state, chain, params) for x in probes)
            )
        except (NoConvergence, PoleCollision, np.linalg.LinAlgError):
            continue
        if key not in fingerprints:
            fingerprints.append(key)
            found.append(state)
    return found


def _sinh2(h: complex, x: complex) -> complex:
    return 2.0 * cmath.sinh(h * x)


def eigenvalue_lambda(u, state: BetheState, chain: ChainSpec, params: ModelParams) -> complex:
    """Transfer-matrix eigenvalue reconstructed from a Bethe root set."""
    h = params.hbar
    ue = as_exponent(u)
    for w in state.roots:
        if abs(cmath.sinh(h * (w - ue))) < _POLE_EPS:
            raise PoleCollision("evaluation point collides with a Bethe root")
    term_a = cmath.exp(h * params.phi)
    term_b = cmath.exp(-h * params.phi)
    for v in chain.v:
        term_a *= _sinh2(h, ue - v + 1.0)
        term_b *= _sinh2(h, ue - v)
    for w in state.roots:
        term_a *= _sinh2(h, w - ue + 1.0) / _sinh2(h, w - ue)
        term_b *= _sinh2(h, ue - w + 1.0) / _sinh2(h, ue - w)
    return term_a + term_b


def theta_poly(u, state: BetheState, chain: ChainSpec, params: ModelParams) -> complex:
    """prod_l b(zeta_l / zeta) over the root set."""
    ue = as_exponent(u)
    out = 1.0 + 0.0j
    for w in state.roots:
        out *= _sinh2(params.hbar, w - ue)
    return out


def theta_check(u, state: BetheState, chain: ChainSpec, params: ModelParams) -> float:
    """Residual of lambda*theta = q^phi prod a * theta(zeta/q) + q^-phi prod b * theta(q zeta)."""
    h = params.hbar
    ue = as_exponent(u)
    lam = eigenvalue_lambda(ue, state, chain, params)
    lhs = lam * theta_poly(ue, state, chain, params)
    coef_a = cmath.exp(h * params.phi)
    coef_b = cmath.exp(-h * params.phi)
    for v in chain.v:
        coef_a *= _sinh2(h, ue - v + 1.0)
        coef_b *= _sinh2(h, ue - v)
    rhs = coef_a * theta_poly(ue - 1.0, state, chain, params) + coef_b * theta_poly(
        ue + 1.0, state, chain, params
    )
    return abs(lhs - rhs) / max(1.0, abs(lhs))
