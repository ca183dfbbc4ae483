"""Plain-text file formats for symplectic codes, classical codes and ft matrices."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from . import field
from .alinear import ClassicalCode, classify
from .errors import ParseError
from .ftops import FtMatrix
from .sympcode import SympCode


def _lines(text: str) -> list[tuple[int, str]]:
    return [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]


def _keyed(lines, idx: int, key: str) -> int:
    if idx >= len(lines):
        raise ParseError(f"missing '{key}' line", idx + 1)
    no, ln = lines[idx]
    parts = ln.split()
    if len(parts) != 2 or parts[0] != key:
        raise ParseError(f"expected '{key} <int>'", no)
    try:
        return int(parts[1])
    except ValueError:
        raise ParseError(f"'{parts[1]}' is not an integer", no) from None


def _rows(lines, start: int, count: int, width: int) -> np.ndarray:
    if len(lines) - start != count:
        raise ParseError(f"expected {count} generator rows, found {len(lines) - start}",
                         lines[-1][0] if lines else None)
    out = np.zeros((count, width), dtype=np.int64)
    for r, (no, ln) in enumerate(lines[start:]):
        try:
            vals = [int(x) for x in ln.split()]
        except ValueError:
            raise ParseError("non-integer entry", no) from None
        if len(vals) != width:
            raise ParseError(f"expected {width} entries, found {len(vals)}", no)
        out[r] = vals
    return out


def _header(lines, kind: str) -> tuple[int, int, int]:
    if not lines or lines[0][1] != kind:
        raise ParseError(f"first line must be '{kind}'", lines[0][0] if lines else 1)
    p = _keyed(lines, 1, "p")
    if not field.is_prime(p):
        raise ParseError(f"{p} is not prime", lines[1][0])
    return p, _keyed(lines, 2, "n"), _keyed(lines, 3, "dim")


def parse_symplectic(text: str) -> SympCode:
    lines = _lines(text)
    p, n, dim = _header(lines, "symplectic")
    G = _rows(lines, 4, dim, 2 * n)
    C = SympCode(p, n, G)
    if C.dim != dim:
        raise ParseError(f"generator rows are dependent (rank {C.dim} < {dim})", lines[-1][0])
    return C


def format_symplectic(C: SympCode) -> str:
    out = ["symplectic", f"p {C.p}", f"n {C.n}", f"dim {C.dim}"]
    out += [" ".join(str(int(x)) for x in row) for row in C.gens]
    return "\n".join(out) + "\n"


def parse_classical(text: str) -> ClassicalCode:
    lines = _lines(text)
    p, n, dim = _header(lines, "classical")
    C = ClassicalCode(p, n, _rows(lines, 4, dim, n))
    if C.dim != dim:
        raise ParseError(f"generator rows are dependent (rank {C.dim} < {dim})", lines[-1][0])
    return C


def format_classical(C: ClassicalCode) -> str:
    out = ["classical", f"p {C.p}", f"n {C.n}", f"dim {C.dim}"]
    out += [" ".join(str(int(x)) for x in row) for row in C.gens]
    return "\n".join(out) + "\n"


def parse_ftmat(text: str) -> FtMatrix:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty file", 1)
    no, head = lines[0]
    parts = head.split()
    keys = ["ftmat", "p", None, "t", None, "d", None, "m", None]
    if len(parts) != 9 or any(k is not None and parts[i] != k for i, k in enumerate(keys)):
        raise ParseError("header must be 'ftmat p <p> t <t> d <d> m <m>'", no)
    try:
        p, t, d, m = (int(parts[i]) for i in (2, 4, 6, 8))
    except ValueError:
        raise ParseError("non-integer header field", no) from None
    if not field.is_prime(p):
        raise ParseError(f"{p} is not prime", no)
    if len(lines) != m + 1:
        raise ParseError(f"expected {m} matrix rows, found {len(lines) - 1}", lines[-1][0])
    E = np.zeros((m, m, 2), dtype=np.int64)
    for j, (no, ln) in enumerate(lines[1:]):
        cells = ln.split()
        if len(cells) != m:
            raise ParseError(f"expected {m} entries, found {len(cells)}", no)
        for k, cell in enumerate(cells):
            try:
                a, b = cell.split(":")
                E[j, k] = int(a), int(b)
            except ValueError:
                raise ParseError(f"entry '{cell}' is not of the form a:b", no) from None
    return FtMatrix(classify(t, d, p), E)


def format_ftmat(T: FtMatrix) -> str:
    A = T.algebra
    out = [f"ftmat p {A.p} t {A.t} d {A.d} m {T.m}"]
    out += [" ".join(f"{a}:{b}" for a, b in row) for row in T.entries]
    return "\n".join(out) + "\n"


def read(path: str | Path, parser):
    return parser(Path(path).read_text())


def write(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
