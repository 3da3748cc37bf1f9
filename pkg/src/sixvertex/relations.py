"""Functional-relation verification suite and the brute-force partition oracle.

Each check returns RelationRecord entries carrying a scale-free residual
(max absolute entry of lhs - rhs over max(1, max |lhs|)) so pass criteria are
uniform across relations.
"""
from __future__ import annotations

import cmath
import time
from dataclasses import dataclass, field

import numpy as np

from .bethe import bethe_solve_all, eigenvalue_lambda, theta_check
from .errors import BudgetExceeded
from .params import ChainSpec, ModelParams, as_exponent
from .qkernel import qpow, weights
from .transfer import cmat, qop_p, sector_indices, transfer_p

DEFAULT_UPOINTS = (0.1, 0.37, -0.23, 0.52, 0.05)
DEFAULT_MUS = (0.0, 1.0, 2.0, 1.7)
MAX_BRUTE_BONDS = 20


@dataclass
class RelationRecord:
    name: str
    equation: str
    params: dict
    residual: float
    tol: float
    passed: bool
    runtime_ms: float = field(default=0.0, compare=False)


def residual_norm(lhs: np.ndarray, rhs: np.ndarray) -> float:
    lhs = np.asarray(lhs)
    rhs = np.asarray(rhs)
    scale = max(1.0, float(np.abs(lhs).max()))
    return float(np.abs(lhs - rhs).max()) / scale


def _record(name, equation, rec_params, lhs, rhs, params: ModelParams, t0: float, tol=None) -> RelationRecord:
    res = residual_norm(lhs, rhs)
    tol = params.tol_check if tol is None else tol
    return RelationRecord(
        name=name,
        equation=equation,
        params=rec_params,
        residual=res,
        tol=tol,
        passed=res <= tol,
        runtime_ms=(time.perf_counter() - t0) * 1e3,
    )


def _prod_a(u, chain: ChainSpec, params: ModelParams, offset: float = 0.0) -> complex:
    """prod_i a(q^offset (zeta/eta_i)^(-s/2))."""
    h = params.hbar
    out = 1.0 + 0.0j
    for v in chain.v:
        out *= 2.0 * cmath.sinh(h * (1.0 + offset - (as_exponent(u) - v) * params.s / 2.0))
    return out


def _prod_b(u, chain: ChainSpec, params: ModelParams, offset: float = 0.0) -> complex:
    """prod_i b(q^offset (zeta/eta_i)^(-s/2))."""
    h = params.hbar
    out = 1.0 + 0.0j
    for v in chain.v:
        out *= 2.0 * cmath.sinh(h * (offset - (as_exponent(u) - v) * params.s / 2.0))
    return out


def _identity_scalar(u, chain: ChainSpec, params: ModelParams) -> complex:
    """The scalar of transfer_p at weight 0:
    q^{n/2} prod_i ((zeta/eta_i)^{-s/2} - q^{-1} (zeta/eta_i)^{s/2})."""
    out = qpow(chain.n / 2.0, params)
    for v in chain.v:
        d = (as_exponent(u) - v) * params.s / 2.0
        out *= qpow(-d, params) - qpow(-1.0 + d, params)
    return out


# ---------------------------------------------------------------------------
# commutativity


def check_commutativity(chain: ChainSpec, params: ModelParams, upoints=(0.1, 0.37), mixed_mus=(1.0, 2.3)):
    u1, u2 = upoints[0], upoints[1]
    records = []

    def comm(name, A, B, rp):
        t0 = time.perf_counter()
        records.append(_record(name, "[A,B]=0", rp, A @ B, B @ A, params, t0))

    T1 = transfer_p(1.0, u1, chain, params)
    T2 = transfer_p(1.0, u2, chain, params)
    Q1 = qop_p(u1, chain, params)
    Q2 = qop_p(u2, chain, params)
    Qb1 = qop_p(u1, chain, params, bar=True)
    Qb2 = qop_p(u2, chain, params, bar=True)
    rp = {"n": chain.n, "u1": u1, "u2": u2}
    comm("commut-TT", T1, T2, rp)
    comm("commut-TQ", T1, Q2, rp)
    comm("commut-TQbar", T1, Qb2, rp)
    comm("commut-QQ", Q1, Q2, rp)
    comm("commut-QbarQbar", Qb1, Qb2, rp)
    comm("commut-QQbar", Q1, Qb2, rp)
    mu1, mu2 = mixed_mus
    A = transfer_p(mu1, u1, chain, params, aux="subtracted" if not float(mu1).is_integer() else "auto")
    B = transfer_p(mu2, u2, chain, params, aux="verma")
    comm("commut-TmuTmu", A, B, {"n": chain.n, "u1": u1, "u2": u2, "mu1": mu1, "mu2": mu2})
    return records


# ---------------------------------------------------------------------------
# TQ relations


def check_tq(chain: ChainSpec, params: ModelParams, upoints=DEFAULT_UPOINTS):
    records = []
    s = params.s
    for u in upoints:
        T = transfer_p(1.0, u, chain, params)
        t0 = time.perf_counter()
        lhs = T @ qop_p(u, chain, params)
        rhs = qpow(params.phi, params) * _prod_a(u, chain, params) * qop_p(u + 2.0 / s, chain, params) + qpow(
            -params.phi, params
        ) * _prod_b(u, chain, params) * qop_p(u - 2.0 / s, chain, params)
        records.append(_record("tq", "T.Q = a.Q(+) + b.Q(-)", {"n": chain.n, "u": u}, lhs, rhs, params, t0))

        t0 = time.perf_counter()
        lhsb = T @ qop_p(u, chain, params, bar=True)
        rhsb = qpow(-params.phi, params) * _prod_a(u, chain, params) * qop_p(
            u + 2.0 / s, chain, params, bar=True
        ) + qpow(params.phi, params) * _prod_b(u, chain, params) * qop_p(u - 2.0 / s, chain, params, bar=True)
        records.append(
            _record("tq-bar", "T.Qbar = a.Qbar(+) + b.Qbar(-)", {"n": chain.n, "u": u}, lhsb, rhsb, params, t0)
        )

    if s == -2:
        # the classic form: shifts q^{-1} zeta and q zeta with per-site weights
        u = upoints[0]
        t0 = time.perf_counter()
        T = transfer_p(1.0, u, chain, params)
        pa = pb = 1.0 + 0.0j
        for v in chain.v:
            a, b, _ = weights(as_exponent(u) - v, params)
            pa *= a
            pb *= b
        lhs = T @ qop_p(u, chain, params)
        rhs = qpow(params.phi, params) * pa * qop_p(u - 1.0, chain, params) + qpow(
            -params.phi, params
        ) * pb * qop_p(u + 1.0, chain, params)
        records.append(
            _record("tq-baxter", "T.Q = a.Q(zeta/q) + b.Q(q zeta)", {"n": chain.n, "u": u}, lhs, rhs, params, t0)
        )

    # one three-term instance at shift labels (2, -2, 0): the two outer
    # transfer factors are the subtracted weight -2 objects computed
    # numerically, not the constant they reduce to
    u = upoints[0]
    t0 = time.perf_counter()
    Tm2_m = transfer_p(-2.0, u - 1.0 / s, chain, params, aux="subtracted")
    Tm2_p = transfer_p(-2.0, u + 1.0 / s, chain, params, aux="subtracted")
    term1 = transfer_p(1.0, u, chain, params) @ qop_p(u, chain, params)
    term2 = qpow(params.phi, params) * (Tm2_m @ qop_p(u + 2.0 / s, chain, params))
    term3 = qpow(-params.phi, params) * (Tm2_p @ qop_p(u - 2.0 / s, chain, params))
    records.append(
        _record(
            "tq-three-term",
            "sum of three shifted T.Q terms = 0",
            {"n": chain.n, "u": u, "labels": "(2,-2,0)"},
            term1 + term2 + term3,
            np.zeros_like(term1),
            params,
            t0,
        )
    )
    return records


# ---------------------------------------------------------------------------
# Wronskian and factorization


def _q_pair_product(u, mu, chain: ChainSpec, params: ModelParams):
    """C [ q^{(mu+1)phi} Q(q^{(mu+1)/s} z) Qbar(q^{-(mu+1)/s} z)
          - q^{-(mu+1)phi} Q(q^{-(mu+1)/s} z) Qbar(q^{(mu+1)/s} z) ]."""
    s = params.s
    d = (complex(mu) + 1.0) / s
    C = cmat(chain, params)
    t1 = qpow((complex(mu) + 1.0) * params.phi, params) * (
        qop_p(u + d, chain, params) @ qop_p(u - d, chain, params, bar=True)
    )
    t2 = qpow(-(complex(mu) + 1.0) * params.phi, params) * (
        qop_p(u - d, chain, params) @ qop_p(u + d, chain, params, bar=True)
    )
    return C @ (t1 - t2)


def _q_normalizers(chain: ChainSpec, params: ModelParams):
    cp = 1.0 - qpow(-chain.n - 2.0 * params.phi, params)
    cm = 1.0 - qpow(-chain.n + 2.0 * params.phi, params)
    return cp, cm


def check_wronskian_and_factorization(chain: ChainSpec, params: ModelParams, upoints=(0.1, 0.37), mus=DEFAULT_MUS):
    records = []
    dim = 2**chain.n
    cp, cm = _q_normalizers(chain, params)
    for u in upoints:
        t0 = time.perf_counter()
        lhs = _q_pair_product(u, 0.0, chain, params)
        rhs = cp * cm * _identity_scalar(u, chain, params) * qpow(-chain.n / 2.0, params) * np.eye(dim)
        records.append(
            _record("wronskian", "C[Q Qbar - Qbar Q shifted] = const.Id", {"n": chain.n, "u": u}, lhs, rhs, params, t0)
        )
    u = upoints[0]
    for mu in mus:
        t0 = time.perf_counter()
        lhs = transfer_p(mu, u, chain, params, aux="subtracted")
        rhs = qpow(chain.n / 2.0, params) / (cp * cm) * _q_pair_product(u, mu, chain, params)
        records.append(
            _record("factorization", "T_mu = C.Q.Qbar bilinear", {"n": chain.n, "u": u, "mu": mu}, lhs, rhs, params, t0)
        )
    return records


# ---------------------------------------------------------------------------
# TT fusion


def check_tt(chain: ChainSpec, params: ModelParams, upoints=(0.1,), mus=(0.0, 1.0, 2.0, 1.4)):
    records = []
    s = params.s
    for u in upoints:
        for mu in mus:
            t0 = time.perf_counter()
            lhs = transfer_p(mu, u + 1.0 / s, chain, params) @ transfer_p(mu, u - 1.0 / s, chain, params)
            scal = 1.0 + 0.0j
            for v in chain.v:
                scal *= (
                    2.0 * cmath.sinh(params.hbar * (1.0 + mu / 2.0 - (as_exponent(u) - v) * s / 2.0))
                    * 2.0
                    * cmath.sinh(params.hbar * (-mu / 2.0 - (as_exponent(u) - v) * s / 2.0))
                )
            rhs = scal * np.eye(2**chain.n) + transfer_p(mu - 1.0, u, chain, params) @ transfer_p(
                mu + 1.0, u, chain, params
            )
            records.append(
                _record("tt-square", "T_mu(+)T_mu(-) = ab.Id + T_(mu-1)T_(mu+1)", {"n": chain.n, "u": u, "mu": mu}, lhs, rhs, params, t0)
            )

            t0 = time.perf_counter()
            lhs = transfer_p(1.0, u, chain, params) @ transfer_p(mu, u - (mu + 1.0) / s, chain, params)
            rhs = _prod_a(u, chain, params) * transfer_p(mu + 1.0, u - mu / s, chain, params) + _prod_b(
                u, chain, params
            ) * transfer_p(mu - 1.0, u - (mu + 2.0) / s, chain, params)
            records.append(
                _record("tt-shift", "T.T_mu = a.T_(mu+1) + b.T_(mu-1)", {"n": chain.n, "u": u, "mu": mu}, lhs, rhs, params, t0)
            )
    return records


def check_special_values(chain: ChainSpec, params: ModelParams, upoints=(0.1, 0.37)):
    records = []
    dim = 2**chain.n
    for u in upoints:
        t0 = time.perf_counter()
        lhs = transfer_p(0.0, u, chain, params, aux="subtracted")
        rhs = _identity_scalar(u, chain, params) * np.eye(dim)
        records.append(_record("special-T0", "T_0 = scalar.Id", {"n": chain.n, "u": u}, lhs, rhs, params, t0))
        t0 = time.perf_counter()
        lhs = transfer_p(-1.0, u, chain, params)
        records.append(
            _record("special-Tminus1", "T_(-1) = 0", {"n": chain.n, "u": u}, lhs, np.zeros((dim, dim)), params, t0)
        )
    return records


# ---------------------------------------------------------------------------
# partition function


def vertex_weights(u, params: ModelParams) -> np.ndarray:
    """Vertex weight tensor W[a, i, b, j] (left, top, right, bottom bonds)."""
    a, b, c = weights(u, params)
    W = np.zeros((2, 2, 2, 2), dtype=complex)
    W[0, 0, 0, 0] = a
    W[1, 1, 1, 1] = a
    W[0, 1, 0, 1] = b
    W[1, 0, 1, 0] = b
    W[0, 1, 1, 0] = c
    W[1, 0, 0, 1] = c
    return W


def partition_bruteforce(u, chain: ChainSpec, rows: int, params: ModelParams) -> complex:
    """Exact sum over all bond configurations of an n x rows twisted torus.

    One diagonal twist insertion per horizontal row; periodic in both
    directions.  Budget: 2*n*rows enumerated bonds at most MAX_BRUTE_BONDS.
    """
    n, m = chain.n, rows
    bonds = 2 * n * m
    if bonds > MAX_BRUTE_BONDS:
        raise BudgetExceeded(f"{bonds} bonds exceed the enumeration budget of {MAX_BRUTE_BONDS}")
    ue = as_exponent(u)
    wtab = [vertex_weights(ue - v, params).reshape(16) for v in chain.v]
    tw = np.array([qpow(params.phi, params), qpow(-params.phi, params)])

    total = 1 << bonds
    cfg = np.arange(total, dtype=np.int64)
    # bit k = horizontal bond (r, i) for k = r*n + i; the rest are vertical
    hbit = [[(cfg >> (r * n + i)) & 1 for i in range(n)] for r in range(m)]
    vbit = [[(cfg >> (n * m + r * n + i)) & 1 for i in range(n)] for r in range(m)]

    amp = np.ones(total, dtype=complex)
    for r in range(m):
        for i in range(n):
            left = hbit[r][i]
            right = hbit[r][(i + 1) % n]
            top = vbit[r][i]
            bottom = vbit[(r + 1) % m][i]
            idx = ((left * 2 + top) * 2 + right) * 2 + bottom
            amp *= wtab[i][idx]
        amp *= tw[hbit[r][0]]
    return complex(amp.sum())


def partition_transfer(u, chain: ChainSpec, rows: int, params: ModelParams) -> complex:
    """tr(T^rows) for the weight-1 polynomial transfer matrix."""
    T = transfer_p(1.0, u, chain, params)
    return complex(np.trace(np.linalg.matrix_power(T, rows)))


def check_partition(chain: ChainSpec, params: ModelParams, u=0.3, rows=None):
    rows = chain.n if rows is None else rows
    t0 = time.perf_counter()
    zb = partition_bruteforce(u, chain, rows, params)
    zt = partition_transfer(u, chain, rows, params)
    res = abs(zb - zt) / max(1.0, abs(zb))
    return [
        RelationRecord(
            name="partition",
            equation="Z = tr(T^m) vs bond enumeration",
            params={"n": chain.n, "rows": rows, "u": u},
            residual=res,
            tol=params.tol_check,
            passed=res <= params.tol_check,
            runtime_ms=(time.perf_counter() - t0) * 1e3,
        )
    ]


# ---------------------------------------------------------------------------
# Bethe reconstruction


def check_bethe(chain: ChainSpec, params: ModelParams, u=0.45):
    records = []
    t0 = time.perf_counter()
    T = transfer_p(1.0, u, chain, params)
    worst_eig = 0.0
    worst_theta = 0.0
    n_states = 0
    for p in range(chain.n + 1):
        ix = sector_indices(chain.n, p)
        evals = np.linalg.eigvals(T[np.ix_(ix, ix)])
        for state in bethe_solve_all(p, chain, params):
            lam = eigenvalue_lambda(u, state, chain, params)
            worst_eig = max(worst_eig, float(np.min(np.abs(evals - lam))) / max(1.0, abs(lam)))
            worst_theta = max(worst_theta, theta_check(u, state, chain, params))
            n_states += 1
    dt = (time.perf_counter() - t0) * 1e3
    records.append(
        RelationRecord(
            name="bethe-spectrum",
            equation="reconstructed lambda in spec(T)",
            params={"n": chain.n, "u": u, "states": n_states},
            residual=worst_eig,
            tol=params.tol_check,
            passed=worst_eig <= params.tol_check,
            runtime_ms=dt,
        )
    )
    records.append(
        RelationRecord(
            name="bethe-theta",
            equation="lambda.theta two-term identity",
            params={"n": chain.n, "u": u, "states": n_states},
            residual=worst_theta,
            tol=params.tol_check,
            passed=worst_theta <= params.tol_check,
            runtime_ms=dt,
        )
    )
    return records


# ---------------------------------------------------------------------------
# full suite


def run_suite(chain: ChainSpec, params: ModelParams) -> list:
    """All relation records for one chain, in a fixed deterministic order."""
    records = []
    records += check_commutativity(chain, params)
    records += check_tq(chain, params)
    records += check_wronskian_and_factorization(chain, params)
    records += check_tt(chain, params)
    records += check_special_values(chain, params)
    if 2 * chain.n * chain.n <= MAX_BRUTE_BONDS:
        records += check_partition(chain, params)
    records += check_bethe(chain, params)
    return records
