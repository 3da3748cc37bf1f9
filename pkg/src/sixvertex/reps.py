"""Dense-matrix images of algebra generators for the four representation families.

Finite-dimensional quotients, truncated Verma modules (generators E, F and the
diagonal Cartan family q^{nu H}), and the two truncated q-oscillator Fock
modules (b, b-dagger and q^{nu N}).  The truncation convention is a hard
cutoff: the generator that raises the basis index annihilates the top basis
vector, so every defining relation holds exactly away from that boundary row.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import RegimeError
from .params import ModelParams
from .qkernel import qnum

FINITE = "finite"
VERMA = "verma"
FOCK_PLUS = "fock+"
FOCK_MINUS = "fock-"


@dataclass(frozen=True)
class RepMatrices:
    """Generator images for one representation.

    ``lower``/``raise_`` are the two ladder matrices (E, F for the quantum
    group families; b, b-dagger for the oscillator ones) and ``cartan`` is
    the vector of H- or N-eigenvalues, so the diagonal generator at parameter
    nu is diag(exp(hbar * nu * cartan)).
    """

    kind: str
    weight: complex
    dim: int
    hbar: complex
    lower: np.ndarray = field(repr=False)
    raise_: np.ndarray = field(repr=False)
    cartan: np.ndarray = field(repr=False)

    def diag_gen(self, nu) -> np.ndarray:
        """q^{nu H} (sl2 families) or q^{nu N} (oscillator families)."""
        return np.diag(np.exp(self.hbar * complex(nu) * self.cartan))

    def qH(self, nu) -> np.ndarray:
        if self.kind not in (FINITE, VERMA):
            raise RegimeError("qH is defined on the quantum-group families only")
        return self.diag_gen(nu)

    def qN(self, nu) -> np.ndarray:
        if self.kind not in (FOCK_PLUS, FOCK_MINUS):
            raise RegimeError("qN is defined on the oscillator families only")
        return self.diag_gen(nu)

    # aliases matching the generator names of each family
    @property
    def E(self) -> np.ndarray:
        return self.lower

    @property
    def F(self) -> np.ndarray:
        return self.raise_

    @property
    def b(self) -> np.ndarray:
        if self.kind == FOCK_MINUS:
            return self.raise_
        return self.lower

    @property
    def bdag(self) -> np.ndarray:
        if self.kind == FOCK_MINUS:
            return self.lower
        return self.raise_


def _ladders(dim: int, coeff) -> tuple:
    """Index-lowering and index-raising matrices with the given lowering weights."""
    down = np.zeros((dim, dim), dtype=complex)
    up = np.zeros((dim, dim), dtype=complex)
    for k in range(1, dim):
        down[k - 1, k] = coeff(k)
    for k in range(dim - 1):
        up[k + 1, k] = 1.0
    return down, up


def rep_finite(m: int, params: ModelParams) -> RepMatrices:
    """(m+1)-dimensional module: q^{nu H} v_k = q^{nu(m-2k)} v_k,
    E v_k = [k][m-k+1] v_{k-1}, F v_k = v_{k+1} with F v_m = 0."""
    if m < 0:
        raise RegimeError("finite module label m must be >= 0")
    dim = m + 1
    E, F = _ladders(dim, lambda k: qnum(k, params) * qnum(m - k + 1, params))
    cartan = np.array([m - 2 * k for k in range(dim)], dtype=complex)
    return RepMatrices(FINITE, complex(m), dim, params.hbar, E, F, cartan)


def rep_verma(mu, D: int, params: ModelParams) -> RepMatrices:
    """D-row truncation of the weight-mu Verma module (same ladder action,
    with F v_{D-1} = 0 at the cutoff)."""
    if D < 2:
        raise RegimeError("Verma truncation needs D >= 2")
    mu = complex(mu)
    E, F = _ladders(D, lambda k: qnum(k, params) * qnum(mu - k + 1, params))
    cartan = mu - 2.0 * np.arange(D, dtype=complex)
    return RepMatrices(VERMA, mu, D, params.hbar, E, F, cartan)


def rep_fock(sign: str, D: int, params: ModelParams) -> RepMatrices:
    """Truncated Fock modules of the q-oscillator algebra.

    sign='plus':  q^{nu N} v_k = q^{nu k} v_k, b-dag v_k = v_{k+1},
                  b v_k = [k] v_{k-1}.
    sign='minus': q^{nu N} u_k = q^{-nu(k+1)} u_k, b u_k = u_{k+1},
                  b-dag u_k = -[k] u_{k-1}.
    """
    if D < 2:
        raise RegimeError("Fock truncation needs D >= 2")
    if sign in ("plus", "+"):
        b, bdag = _ladders(D, lambda k: qnum(k, params))
        cartan = np.arange(D, dtype=complex)
        return RepMatrices(FOCK_PLUS, 0.0 + 0.0j, D, params.hbar, b, bdag, cartan)
    if sign in ("minus", "-"):
        bdag, b = _ladders(D, lambda k: -qnum(k, params))
        cartan = -(np.arange(D, dtype=complex) + 1.0)
        return RepMatrices(FOCK_MINUS, 0.0 + 0.0j, D, params.hbar, bdag, b, cartan)
    raise RegimeError(f"unknown Fock sign {sign!r}")
