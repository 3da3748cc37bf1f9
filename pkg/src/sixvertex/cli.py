"""Batch command-line front end.

Subcommands: verify, rmatrix, spectrum, bethe, partition.  Configuration is a
flat "key = value" text file; command-line flags override file values.  Exit
codes: 0 success, 1 failed relation, 2 invalid configuration or regime.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import textio
from .bethe import bethe_solve_all
from .errors import BudgetExceeded, RegimeError
from .operators import r_matrix
from .params import ChainSpec, ModelParams
from .relations import partition_bruteforce, partition_transfer, run_suite
from .transfer import transfer_p

CONFIG_KEYS = (
    "hbar_re",
    "hbar_im",
    "s0",
    "s1",
    "phi_re",
    "phi_im",
    "n",
    "v",
    "fock_dim",
    "verma_dim",
    "tol_check",
    "tol_series",
)

_DEFAULTS = {
    "hbar_re": ModelParams().hbar.real,
    "hbar_im": 0.0,
    "s0": -1,
    "s1": -1,
    "phi_re": -3.0,
    "phi_im": 0.0,
    "n": 2,
    "v": "",
    "fock_dim": 48,
    "verma_dim": 48,
    "tol_check": 1e-8,
    "tol_series": 1e-15,
}


def load_config(path=None, overrides=None):
    """Merge defaults, an optional config file, and key=value overrides."""
    cfg = dict(_DEFAULTS)
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise RegimeError(f"config line not of the form key = value: {raw!r}")
                key, val = (part.strip() for part in line.split("=", 1))
                if key not in CONFIG_KEYS:
                    raise RegimeError(f"unknown config key {key!r}")
                cfg[key] = val
    for item in overrides or ():
        if "=" not in item:
            raise RegimeError(f"--set needs KEY=VALUE, got {item!r}")
        key, val = (part.strip() for part in item.split("=", 1))
        if key not in CONFIG_KEYS:
            raise RegimeError(f"unknown config key {key!r}")
        cfg[key] = val
    return _build(cfg)


def _build(cfg):
    params = ModelParams(
        hbar=complex(float(cfg["hbar_re"]), float(cfg["hbar_im"])),
        s0=int(cfg["s0"]),
        s1=int(cfg["s1"]),
        phi=complex(float(cfg["phi_re"]), float(cfg["phi_im"])),
        tol_series=float(cfg["tol_series"]),
        tol_check=float(cfg["tol_check"]),
        fock_dim=int(cfg["fock_dim"]),
        verma_dim=int(cfg["verma_dim"]),
    )
    n = int(cfg["n"])
    vtxt = str(cfg["v"]).strip()
    v = tuple(float(tok) for tok in vtxt.split(",") if tok.strip()) if vtxt else (0.0,) * n
    chain = ChainSpec(n=n, v=v)
    return params, chain


def _parse_u(text) -> complex:
    parts = str(text).split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    return complex(float(parts[0]), float(parts[1]))


def _emit(doc: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)


def _add_common(sub):
    sub.add_argument("--config", default=None, help="flat key = value configuration file")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of the text format")
    sub.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="override a config key")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sixvertex", description=__doc__)
    subs = ap.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="run the functional-relation suite")
    _add_common(p)

    p = subs.add_parser("rmatrix", help="dump the 4x4 R-matrix at a spectral point")
    _add_common(p)
    p.add_argument("--u", default="0", help="spectral exponent, RE or RE,IM")
    p.add_argument("--full", action="store_true", help="include the scalar prefactor")

    p = subs.add_parser("spectrum", help="eigenvalues of the transfer matrix")
    _add_common(p)
    p.add_argument("--u", default="0.3")
    p.add_argument("--mu", type=float, default=1.0)

    p = subs.add_parser("bethe", help="solve the Bethe equations in one magnon sector")
    _add_common(p)
    p.add_argument("--p", type=int, required=True, help="magnon number")

    p = subs.add_parser("partition", help="partition function of an n x rows torus")
    _add_common(p)
    p.add_argument("--u", default="0.3")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="use the bond-enumeration oracle")
    return ap


def cmd_verify(args) -> int:
    params, chain = load_config(args.config, args.set)
    records = run_suite(chain, params)
    doc = textio.report_json(records) if args.json else textio.format_report(records)
    _emit(doc, args.out)
    return 0 if all(r.passed for r in records) else 1


def cmd_rmatrix(args) -> int:
    params, _ = load_config(args.config, args.set)
    M = r_matrix(_parse_u(args.u), params, normalized=not args.full)
    _emit(textio.matrix_json(M) if args.json else textio.format_matrix(M), args.out)
    return 0


def cmd_spectrum(args) -> int:
    params, chain = load_config(args.config, args.set)
    T = transfer_p(args.mu, _parse_u(args.u), chain, params)
    evals = np.linalg.eigvals(T)
    order = np.lexsort((evals.imag, evals.real))
    M = evals[order].reshape(-1, 1)
    _emit(textio.matrix_json(M) if args.json else textio.format_matrix(M), args.out)
    return 0


def cmd_bethe(args) -> int:
    params, chain = load_config(args.config, args.set)
    states = bethe_solve_all(args.p, chain, params)
    lines = ["sixvertex-bethe", f"p {args.p}", f"count {len(states)}"]
    for st in states:
        lines.append("state")
        lines.append(f"residual {st.residual!r}")
        for w in st.roots:
            lines.append(f"root {w.real!r} {w.imag!r}")
        lines.append("end")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_partition(args) -> int:
    params, chain = load_config(args.config, args.set)
    u = _parse_u(args.u)
    z = (
        partition_bruteforce(u, chain, args.rows, params)
        if args.brute
        else partition_transfer(u, chain, args.rows, params)
    )
    M = np.array([[z]])
    _emit(textio.matrix_json(M) if args.json else textio.format_matrix(M), args.out)
    return 0


_HANDLERS = {
    "verify": cmd_verify,
    "rmatrix": cmd_rmatrix,
    "spectrum": cmd_spectrum,
    "bethe": cmd_bethe,
    "partition": cmd_partition,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (RegimeError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
