"""Fault-tolerant operations: m x m matrices over a two-dimensional algebra A.

A matrix ``T`` acts on m code blocks from the right, ``(vT)_k = sum_j v_j T_jk``,
with each ``v_j`` a pairs vector and algebra entries acting coordinate-wise.
``C^(m)`` is laid out block-major: block j holds coordinates ``j*n .. j*n+n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field
from .alinear import AlgElem, TwoDimAlgebra, conj_arrays, is_A_linear, mul_arrays
from .errors import DomainError, ResourceError
from .sympcode import SympCode, symp_form


@dataclass(frozen=True, eq=False)
class FtMatrix:
    algebra: TwoDimAlgebra
    entries: np.ndarray  # (m, m, 2): entry (j, k) is a + bX

    def __post_init__(self) -> None:
        E = np.asarray(self.entries, dtype=np.int64) % self.algebra.p
        if E.ndim != 3 or E.shape[0] != E.shape[1] or E.shape[2] != 2:
            raise DomainError("entries must form an m x m grid of (a, b) pairs")
        object.__setattr__(self, "entries", E)

    @classmethod
    def from_grid(cls, A: TwoDimAlgebra, grid) -> FtMatrix:
        """Build from nested lists of ints (scalars), pairs, or AlgElem."""
        def pair(x):
            if isinstance(x, AlgElem):
                return (x.a, x.b)
            if isinstance(x, (int, np.integer)):
                return (int(x), 0)
            return tuple(x)
        return cls(A, np.array([[pair(x) for x in row] for row in grid], dtype=np.int64))

    @classmethod
    def identity(cls, A: TwoDimAlgebra, m: int) -> FtMatrix:
        E = np.zeros((m, m, 2), dtype=np.int64)
        E[np.arange(m), np.arange(m), 0] = 1
        return cls(A, E)

    @property
    def m(self) -> int:
        return self.entries.shape[0]

    @property
    def is_scalar(self) -> bool:
        """All entries lie in GF(p), so every code is invariant-compatible."""
        return not self.entries[..., 1].any()

    def __matmul__(self, other: FtMatrix) -> FtMatrix:
        return FtMatrix(self.algebra, _matmul(self.algebra, self.entries[None], other.entries[None])[0])

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FtMatrix) and self.algebra == other.algebra
                and np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash((self.algebra, self.entries.tobytes()))

    def __repr__(self) -> str:
        rows = ["[" + " ".join(f"{a}:{b}" for a, b in row) + "]" for row in self.entries]
        A = self.algebra
        return f"FtMatrix(p={A.p}, t={A.t}, d={A.d}, {' '.join(rows)})"


def _matmul(A: TwoDimAlgebra, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Batched product over A of arrays shaped (N, m, m, 2)."""
    m = X.shape[1]
    out = np.zeros(np.broadcast_shapes(X.shape, Y.shape), dtype=np.int64)
    for l in range(m):
        out += mul_arrays(A, X[:, :, l, None, :], Y[:, None, l, :, :])
    return out % A.p


def _dagger(A: TwoDimAlgebra, X: np.ndarray) -> np.ndarray:
    return conj_arrays(A, np.swapaxes(X, 1, 2))


def dagger(T: FtMatrix) -> FtMatrix:
    return FtMatrix(T.algebra, _dagger(T.algebra, T.entries[None])[0])


def _identity_mask(X: np.ndarray) -> np.ndarray:
    m = X.shape[1]
    I = np.zeros((m, m, 2), dtype=np.int64)
    I[np.arange(m), np.arange(m), 0] = 1
    return (X == I).all(axis=(1, 2, 3))


def is_ft_unitary(T: FtMatrix) -> bool:
    """T^dagger T = 1 over A."""
    return bool(_identity_mask(_matmul(T.algebra, _dagger(T.algebra, T.entries[None]), T.entries[None]))[0])


def _monomial_mask(X: np.ndarray) -> np.ndarray:
    nz = X.any(axis=3)
    return (nz.sum(axis=2) == 1).all(axis=1) & (nz.sum(axis=1) == 1).all(axis=1)


def is_monomial(T: FtMatrix) -> bool:
    return bool(_monomial_mask(T.entries[None])[0])


def embed_symplectic(T: FtMatrix) -> np.ndarray:
    """2m x 2m matrix over GF(p): block (j, k) is a I + b Xhat for entry a + bX."""
    A, m = T.algebra, T.m
    E = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for j in range(m):
        for k in range(m):
            E[2 * j:2 * j + 2, 2 * k:2 * k + 2] = A.matrix(AlgElem(*map(int, T.entries[j, k])))
    return E % A.p


def is_symplectic_matrix(E: np.ndarray, p: int) -> bool:
    """E J E^t = J for J the block form on 2m coordinates."""
    J = symp_form(E.shape[0] // 2)
    return bool(np.array_equal((E @ J @ E.T) % p, J % p))


def code_power(C: SympCode, m: int) -> SympCode:
    """Direct sum of m copies of C, block-major."""
    n, r = C.n, C.dim
    G = np.zeros((m * r, 2 * m * n), dtype=np.int64)
    for j in range(m):
        G[j * r:(j + 1) * r, 2 * j * n:2 * (j + 1) * n] = C.gens
    return SympCode(C.p, m * n, G)


def act_on_blocks(T: FtMatrix, gens: np.ndarray, n: int) -> np.ndarray:
    """Image of block-major interleaved rows under the embedded action of T."""
    m, p = T.m, T.algebra.p
    E = embed_symplectic(T).reshape(m, 2, m, 2).transpose(0, 2, 1, 3)  # (j, k, x, y)
    V = np.asarray(gens, dtype=np.int64).reshape(-1, m, n, 2)
    out = np.einsum("rjix,jkxy->rkiy", V, E) % p
    return out.reshape(V.shape[0], 2 * m * n)


def preserves_code_power(T: FtMatrix, C: SympCode) -> bool:
    if C.p != T.algebra.p:
        raise DomainError("code and matrix live over different fields")
    if not T.is_scalar and not is_A_linear(C, T.algebra):
        raise DomainError("code is not linear over the matrix's algebra")
    Cm = code_power(C, T.m)
    return Cm.contains(act_on_blocks(T, Cm.gens, C.n))


def split_pair_check(T1, T2, p: int) -> bool:
    """T1^t T2 = 1 over GF(p)."""
    T1 = np.asarray(T1, dtype=np.int64) % p
    T2 = np.asarray(T2, dtype=np.int64) % p
    if T1.shape != T2.shape or T1.ndim != 2 or T1.shape[0] != T1.shape[1]:
        raise DomainError("need two square matrices of the same size")
    for M in (T1, T2):
        field.inverse(M, p)  # raises on singular input
    return bool(np.array_equal((T1.T @ T2) % p, np.eye(T1.shape[0], dtype=np.int64)))


def assemble_split_pair(T1, T2, A: TwoDimAlgebra) -> FtMatrix:
    """T1 X + T2 (1 - X) over the split algebra with X^2 = X."""
    if A.kind != "split" or (A.t, A.d) != (1, 0):
        raise DomainError("need the standard split algebra (t=1, d=0)")
    T1 = np.asarray(T1, dtype=np.int64) % A.p
    T2 = np.asarray(T2, dtype=np.int64) % A.p
    return FtMatrix(A, np.stack([T2, (T1 - T2) % A.p], axis=-1))


@dataclass(frozen=True)
class FtCensus:
    total: int       # matrices examined
    unitary: int
    nonmonomial: int  # unitary and not monomial
    samples: tuple[FtMatrix, ...]


def enumerate_ft_group(A: TwoDimAlgebra, m: int, limit: int = 10**6,
                       scalar: bool = False, keep: int = 4) -> FtCensus:
    """Exhaustively count ft-unitary m x m matrices over A, or over GF(p) if ``scalar``."""
    p = A.p
    q = p if scalar else p * p
    total = q ** (m * m)
    if total > limit:
        raise ResourceError(f"{total} matrices exceed the limit {limit}")
    unitary = nonmono = 0
    samples: list[FtMatrix] = []
    chunk = 1 << 15
    for s in range(0, total, chunk):
        idx = np.arange(s, min(total, s + chunk), dtype=np.int64)
        digits = np.empty((idx.size, m * m), dtype=np.int64)
        for k in range(m * m):
            digits[:, k] = idx % q
            idx = idx // q
        X = np.zeros((digits.shape[0], m, m, 2), dtype=np.int64)
        X[..., 0] = (digits % p).reshape(-1, m, m)
        X[..., 1] = (digits // p).reshape(-1, m, m)
        U = _identity_mask(_matmul(A, _dagger(A, X), X))
        NM = U & ~_monomial_mask(X)
        unitary += int(U.sum())
        nonmono += int(NM.sum())
        for i in np.nonzero(NM)[0][:max(0, keep - len(samples))]:
            samples.append(FtMatrix(A, X[i]))
    return FtCensus(total, unitary, nonmono, tuple(samples))
