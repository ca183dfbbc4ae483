"""Dense linear algebra and small polynomial helpers over a prime field GF(p).

Matrices are plain ``numpy`` int64 arrays whose entries are kept reduced
into ``[0, p)``.  Everything here is a pure function; nothing mutates its
arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (targets are small)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The prime field GF(p)."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        return inv(a, self.p)

    def reduce(self, M) -> np.ndarray:
        return np.asarray(M, dtype=np.int64) % self.p


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise DomainError("zero has no inverse")
    return pow(a, p - 2, p)


def as_matrix(M, p: int, cols: int | None = None) -> np.ndarray:
    """Coerce to a 2-D int64 array reduced mod p (an empty list needs ``cols``)."""
    A = np.asarray(M, dtype=np.int64)
    if A.size == 0:
        ncols = cols if cols is not None else (A.shape[1] if A.ndim == 2 else 0)
        return np.zeros((0, ncols), dtype=np.int64)
    if A.ndim == 1:
        A = A[None, :]
    return A % p


def rref(M, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form over GF(p).

    Returns ``(R, rank, pivots)``; zero rows are kept at the bottom so ``R``
    has the shape of the input.
    """
    R = as_matrix(M, p).copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * inv(int(R[r, c]), p)) % p
        col = R[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            R[mask] = (R[mask] - np.outer(col[mask], R[r])) % p
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M, p: int) -> int:
    return rref(M, p)[1]


def row_basis(M, p: int, cols: int | None = None) -> np.ndarray:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    A = as_matrix(M, p, cols)
    if A.shape[0] == 0:
        return A
    R, r, _ = rref(A, p)
    return R[:r]


def kernel(M, p: int, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : M x^T = 0}``."""
    A = as_matrix(M, p, cols)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, r, pivots = rref(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for j, pc in enumerate(pivots):
            K[i, pc] = (-R[j, f]) % p
    return K


def in_row_space(B, v, p: int) -> bool:
    """Is every row of ``v`` in the row space of ``B``?"""
    V = as_matrix(v, p)
    Bm = as_matrix(B, p, V.shape[1])
    if not V.any():
        return True
    return rank(np.vstack([Bm, V]), p) == rank(Bm, p)


def same_row_space(A, B, p: int, cols: int | None = None) -> bool:
    Ab = row_basis(A, p, cols)
    Bb = row_basis(B, p, cols)
    return Ab.shape == Bb.shape and bool(np.array_equal(Ab, Bb))


def inverse(M, p: int) -> np.ndarray:
    A = as_matrix(M, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DomainError("matrix is not square")
    R, r, _ = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if r < n or not np.array_equal(R[:, :n], np.eye(n, dtype=np.int64)):
        raise DomainError("matrix is singular")
    return R[:, n:]


def complement_basis(outer, inner, p: int) -> np.ndarray:
    """Rows of ``outer`` extending a basis of ``inner`` (assumed contained) to one of ``outer``."""
    Ib = row_basis(inner, p, as_matrix(outer, p).shape[1])
    cur = Ib
    cur_rank = cur.shape[0]
    extra = []
    for row in row_basis(outer, p):
        trial = np.vstack([cur, row[None, :]])
        tr = rank(trial, p)
        if tr > cur_rank:
            cur, cur_rank = trial, tr
            extra.append(row)
    ncols = Ib.shape[1]
    return np.array(extra, dtype=np.int64).reshape(len(extra), ncols)


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    if p == 2:
        raise DomainError("legendre symbol needs an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def roots_of_quadratic(t: int, d: int, p: int) -> list[int]:
    """Roots with multiplicity of x^2 - t x + d, by evaluating at every element."""
    t %= p
    d %= p
    roots = [x for x in range(p) if (x * x - t * x + d) % p == 0]
    if len(roots) == 1:
        # the sole root is double: x^2 - tx + d = (x - r)^2
        return roots * 2
    return roots


# --- polynomials, lowest degree first --------------------------------------

def poly_trim(c, p: int) -> list[int]:
    out = [int(x) % p for x in c]
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mul(f, g, p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly_trim(out, p)


def poly_eval(f, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def circulant_rows(g, n: int, k: int, p: int) -> np.ndarray:
    """Coefficient vectors of x^i g(x) mod (x^n - 1) for i < k."""
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        for j, c in enumerate(g):
            rows[i, (i + j) % n] += c
    return rows % p
