"""R-matrices, monodromy and L-operator cells, and chain composition.

The 4x4 R-matrix is built two independent ways (a closed form and the ordered
product of its factorized pieces) for cross-validation.  Cells are 2x2 arrays
in the per-site indices whose entries are dense operators on the auxiliary
representation space; they are REDUCED: the scalar series prefactor that the
closed forms carry is dropped, which is exactly what the polynomial-normalized
transfer matrices and Q-operators downstream require.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import DivergentSeries, RepMismatch
from .params import ChainSpec, ModelParams, as_exponent
from .qkernel import lambda2, qpow
from .reps import FINITE, FOCK_MINUS, FOCK_PLUS, VERMA, RepMatrices

_E11 = np.array([[1.0, 0.0], [0.0, 0.0]])
_E12 = np.array([[0.0, 1.0], [0.0, 0.0]])
_E21 = _E12.T
_E22 = np.array([[0.0, 0.0], [0.0, 1.0]])

#: permutation operator on C^2 x C^2
PERM4 = np.kron(_E11, _E11) + np.kron(_E12, _E21) + np.kron(_E21, _E12) + np.kron(_E22, _E22)


def r_matrix(u, params: ModelParams, normalized: bool = True) -> np.ndarray:
    """4x4 six-vertex R-matrix at zeta = q^u.

    With ``normalized`` the scalar prefactor is dropped and the entries are the
    Laurent-polynomial weight layout; otherwise the full scalar prefactor
    (power times exponentiated series) is restored, which requires
    |q zeta^s| < 1 and |zeta^s / q| < 1.
    """
    ue = as_exponent(u)
    s, s0, s1 = params.s, params.s0, params.s1
    ac = qpow(1.0 - ue * s / 2.0, params) - qpow(-1.0 + ue * s / 2.0, params)
    bc = qpow(-ue * s / 2.0, params) - qpow(ue * s / 2.0, params)
    out = (
        ac * (np.kron(_E11, _E11) + np.kron(_E22, _E22))
        + bc * (np.kron(_E11, _E22) + np.kron(_E22, _E11))
        + params.kappa
        * (
            qpow(-ue * (s0 - s1) / 2.0, params) * np.kron(_E12, _E21)
            + qpow(ue * (s0 - s1) / 2.0, params) * np.kron(_E21, _E12)
        )
    )
    if normalized:
        return out
    return _r_prefactor(ue, params) * out


def _r_prefactor(ue: complex, params: ModelParams) -> complex:
    # q^{-1/2} zeta^{s/2} exp(lambda2(q zeta^s) + lambda2(q^-3 zeta^s)); the
    # second series is reduced through lambda2(q z) + lambda2(z/q) = -log(1-z)
    # so only arguments inside the unit disk are ever summed
    zs = qpow(ue * params.s, params)
    zp = qpow(1.0, params) * zs
    zm = qpow(-1.0, params) * zs
    if abs(zp) >= 1.0 or abs(zm) >= 1.0:
        raise DivergentSeries("R-matrix prefactor outside its convergence disk")
    den = 1.0 - qpow(-2.0, params) * zs
    if abs(den) < 1e-14:
        raise DivergentSeries("R-matrix pole at zeta^s = q^2")
    return (
        qpow(-0.5 + ue * params.s / 2.0, params)
        * cmath.exp(lambda2(zp, params) - lambda2(zm, params))
        / den
    )


def r_matrix_factored(u, params: ModelParams) -> np.ndarray:
    """Ordered product of the four factor images of the full R-matrix.

    Independent construction used as a cross-validation oracle for
    ``r_matrix(..., normalized=False)``.
    """
    ue = as_exponent(u)
    q = params.q
    kappa = params.kappa
    s, s1 = params.s, params.s1
    zs = qpow(ue * s, params)
    if abs(q * zs) >= 1.0 or abs(zs / q) >= 1.0 or abs(zs) >= 1.0:
        raise DivergentSeries("factorized R-matrix outside its convergence disk")
    eye = np.eye(4, dtype=complex)
    r_lt = eye + kappa * qpow(ue * s1, params) / (1.0 - zs) * np.kron(_E12, _E21)
    r_gt = eye + kappa * qpow(ue * (s - s1), params) / (1.0 - zs) * np.kron(_E21, _E12)
    r_mid = cmath.exp(lambda2(q * zs, params) - lambda2(zs / q, params)) * (
        np.kron(_E11, _E11)
        + (1.0 - q * q * zs) / (1.0 - zs) * np.kron(_E11, _E22)
        + (1.0 - zs) / (1.0 - zs / (q * q)) * np.kron(_E22, _E11)
        + np.kron(_E22, _E22)
    )
    k_fac = cmath.sqrt(q) * (np.kron(_E11, _E11) + np.kron(_E22, _E22)) + (
        1.0 / cmath.sqrt(q)
    ) * (np.kron(_E11, _E22) + np.kron(_E22, _E11))
    return r_lt @ r_mid @ r_gt @ k_fac


def r_variants(R: np.ndarray):
    """(R-check, R-hat, P) with R-check = P R and R-hat = R P."""
    return PERM4 @ R, R @ PERM4, PERM4


def twist_matrix(params: ModelParams) -> np.ndarray:
    """Boundary twist on one two-dimensional site: diag(q^phi, q^-phi)."""
    return np.diag([qpow(params.phi, params), qpow(-params.phi, params)])


def twist_image(rep: RepMatrices, params: ModelParams) -> np.ndarray:
    """Image of the twist element on the representation space.

    q^{phi H} for the quantum-group families, q^{-2 phi N} on the plus Fock
    module and q^{2 phi N} on the minus one (the pairing used by the two
    Q-operators).
    """
    if rep.kind in (FINITE, VERMA):
        return rep.qH(params.phi)
    if rep.kind == FOCK_PLUS:
        return rep.qN(-2.0 * params.phi)
    if rep.kind == FOCK_MINUS:
        return rep.qN(2.0 * params.phi)
    raise RepMismatch(f"no twist image for kind {rep.kind!r}")


@dataclass(frozen=True)
class OperatorCell:
    """2x2 cell in the site indices with dim x dim operator entries.

    ``entries[i, j]`` acts on the representation space; the cell argument is
    the exponent of the site-reduced spectral parameter (typically u - v_i).
    """

    entries: np.ndarray = field(repr=False)  # shape (2, 2, dim, dim)
    rep: RepMatrices
    u: complex


def monodromy_cell(rep: RepMatrices, u, params: ModelParams) -> OperatorCell:
    """Reduced monodromy cell over a finite or truncated-Verma representation.

    Entries:
        [ q^{H/2} - q^{-1} q^{-H/2} zeta^s      kappa F q^{-H/2} zeta^{s0} ]
        [ kappa E q^{H/2} zeta^{s1}             q^{-H/2} - q^{-1} q^{H/2} zeta^s ]
    """
    if rep.kind not in (FINITE, VERMA):
        raise RepMismatch("monodromy cell needs a finite or Verma representation")
    ue = as_exponent(u)
    zs = qpow(ue * params.s, params)
    qm1 = qpow(-1.0, params)
    hp = rep.qH(0.5)
    hm = rep.qH(-0.5)
    ent = np.empty((2, 2, rep.dim, rep.dim), dtype=complex)
    ent[0, 0] = hp - qm1 * zs * hm
    ent[0, 1] = params.kappa * qpow(ue * params.s0, params) * (rep.F @ hm)
    ent[1, 0] = params.kappa * qpow(ue * params.s1, params) * (rep.E @ hp)
    ent[1, 1] = hm - qm1 * zs * hp
    return OperatorCell(ent, rep, ue)


def l_cell(rep: RepMatrices, u, which: str, params: ModelParams) -> OperatorCell:
    """Reduced L-operator cell over a truncated Fock representation.

    which='L' (plus Fock module):
        [ q^{-N}                          kappa b-dag q^N zeta^{s-s1} ]
        [ b q^{-2N} zeta^{s1}             q^N - q^{-2} q^{-N} zeta^s  ]
    which='Lbar' (minus Fock module):
        [ q^N - q^{-2} q^{-N} zeta^s      b q^{-2N} zeta^{s-s1} ]
        [ kappa b-dag q^N zeta^{s1}       q^{-N}                ]
    """
    ue = as_exponent(u)
    zs = qpow(ue * params.s, params)
    qm2 = qpow(-2.0, params)
    ent = np.empty((2, 2, rep.dim, rep.dim), dtype=complex)
    if which == "L":
        if rep.kind != FOCK_PLUS:
            raise RepMismatch("the L cell pairs with the plus Fock module")
        ent[0, 0] = rep.qN(-1.0)
        ent[0, 1] = params.kappa * qpow(ue * (params.s - params.s1), params) * (rep.bdag @ rep.qN(1.0))
        ent[1, 0] = qpow(ue * params.s1, params) * (rep.b @ rep.qN(-2.0))
        ent[1, 1] = rep.qN(1.0) - qm2 * zs * rep.qN(-1.0)
    elif which == "Lbar":
        if rep.kind != FOCK_MINUS:
            raise RepMismatch("the Lbar cell pairs with the minus Fock module")
        ent[0, 0] = rep.qN(1.0) - qm2 * zs * rep.qN(-1.0)
        ent[0, 1] = qpow(ue * (params.s - params.s1), params) * (rep.b @ rep.qN(-2.0))
        ent[1, 0] = params.kappa * qpow(ue * params.s1, params) * (rep.bdag @ rep.qN(1.0))
        ent[1, 1] = rep.qN(-1.0)
    else:
        raise RepMismatch(f"unknown L-cell variant {which!r}")
    return OperatorCell(ent, rep, ue)


def boxtimes(K: np.ndarray, L: np.ndarray) -> np.ndarray:
    """Kronecker product with operator-product entries.

    (K box L)[(i,r), (j,s)] = K[i,j] @ L[r,s]; K is (p,p,D,D), L is (r,r,D,D)
    over the same operator space, result is (p*r, p*r, D, D).
    """
    if K.shape[-1] != L.shape[-1]:
        raise ValueError("boxtimes entries act on different spaces")
    p, r = K.shape[0], L.shape[0]
    out = np.einsum("ijab,rsbc->irjsac", K, L)
    return out.reshape(p * r, p * r, K.shape[-1], L.shape[-1])


def assemble_cell(cell: OperatorCell) -> np.ndarray:
    """Flatten a cell into a (2*dim) x (2*dim) matrix on (rep space) x (site).

    Element ((alpha, i), (beta, j)) = entries[i, j][alpha, beta]; for the
    two-dimensional representation this reproduces the R-matrix index layout.
    """
    d = cell.rep.dim
    return np.transpose(cell.entries, (2, 0, 3, 1)).reshape(2 * d, 2 * d)


def chain_trace(cells, twist: np.ndarray) -> np.ndarray:
    """Trace over the shared representation space of an ordered cell product.

    Entry (i_1..i_n | j_1..j_n) = tr(M_{i_1 j_1} ... M_{i_n j_n} twist), with
    the site multi-index big-endian (site 1 most significant).  Contraction
    accumulates left to right, so the summation order is fixed.
    """
    cells = list(cells)
    if not cells:
        raise ValueError("chain_trace needs at least one cell")
    dim = cells[0].rep.dim
    for c in cells:
        if c.rep.dim != dim or c.rep.kind != cells[0].rep.kind:
            raise RepMismatch("all cells in a chain must share one representation")
    if twist.shape != (dim, dim):
        raise ValueError("twist image must act on the representation space")
    acc = cells[0].entries
    for c in cells[1:]:
        acc = boxtimes(acc, c.entries)
    return np.einsum("ijab,ba->ij", acc, twist)
