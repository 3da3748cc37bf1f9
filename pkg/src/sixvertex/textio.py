"""Plain-text and JSON serialization for matrices and relation reports.

The text matrix format is a short header plus one "re im" line per entry in
row-major order; floats are written with repr so parsing reproduces the exact
complex matrix.  Reports omit per-record timings so that identical runs
serialize byte-identically.
"""
from __future__ import annotations

import json

import numpy as np

MATRIX_TAG = "sixvertex-matrix"
REPORT_TAG = "sixvertex-report"


def format_matrix(M: np.ndarray) -> str:
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    lines = [MATRIX_TAG, f"rows {M.shape[0]}", f"cols {M.shape[1]}", "data"]
    for z in M.reshape(-1):
        lines.append(f"{z.real!r} {z.imag!r}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].strip() != MATRIX_TAG:
        raise ValueError("not a matrix document")
    rows = int(lines[1].split()[1])
    cols = int(lines[2].split()[1])
    if lines[3].strip() != "data":
        raise ValueError("malformed matrix document")
    vals = []
    for ln in lines[4 : 4 + rows * cols]:
        re_s, im_s = ln.split()
        vals.append(complex(float(re_s), float(im_s)))
    if len(vals) != rows * cols:
        raise ValueError("matrix document truncated")
    return np.array(vals, dtype=complex).reshape(rows, cols)


def matrix_json(M: np.ndarray) -> str:
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    doc = {
        "rows": M.shape[0],
        "cols": M.shape[1],
        "data": [[z.real, z.imag] for z in M.reshape(-1)],
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def parse_matrix_json(text: str) -> np.ndarray:
    doc = json.loads(text)
    vals = [complex(re, im) for re, im in doc["data"]]
    return np.array(vals, dtype=complex).reshape(doc["rows"], doc["cols"])


def _param_str(v) -> str:
    if isinstance(v, complex):
        return f"{v.real!r},{v.imag!r}" if v.imag else repr(v.real)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def format_report(records) -> str:
    lines = [REPORT_TAG, f"records {len(records)}"]
    for r in records:
        lines.append("record")
        lines.append(f"name {r.name}")
        lines.append(f"equation {r.equation}")
        for k in sorted(r.params):
            lines.append(f"param {k} {_param_str(r.params[k])}")
        lines.append(f"residual {r.residual!r}")
        lines.append(f"tol {r.tol!r}")
        lines.append(f"pass {'true' if r.passed else 'false'}")
        lines.append("end")
    return "\n".join(lines) + "\n"


def report_json(records) -> str:
    out = []
    for r in records:
        out.append(
            {
                "name": r.name,
                "equation": r.equation,
                "params": {k: _param_str(v) for k, v in sorted(r.params.items())},
                "residual": r.residual,
                "tol": r.tol,
                "pass": r.passed,
            }
        )
    return json.dumps(out, sort_keys=True, indent=1) + "\n"
