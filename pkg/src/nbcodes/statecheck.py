"""Dense state-level verification of small stabilizer codes.

Builds generalized Pauli (Weyl) operators, the code projector of a
self-orthogonal symplectic code, and checks the Knill-Laflamme conditions
``P E P = lambda_E P`` for low-weight errors.

Phase convention: ``W(a, b) = tau^(-ab) X^a Z^(-b)`` per coordinate, with X
the cyclic shift, Z the diagonal of powers of omega = exp(2 pi i / p), and
tau = omega^((p+1)/2) for odd p, so that ``W(v) W(w) = omega^<v,w> W(w) W(v)``
and ``W(v) W(w) = tau^<v,w> W(v + w)``.  For p = 2 the Hermitian Paulis
I, X, Y = iXZ, Z are used instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .errors import DomainError, ResourceError
from .sympcode import SympCode, SympVector, is_self_orthogonal

DEFAULT_CAP = 4096
EPS = 1e-9


def _check_cap(p: int, n: int, cap: int) -> int:
    dim = p**n
    if dim > cap:
        raise ResourceError(f"Hilbert space dimension {dim} exceeds cap {cap}")
    return dim


def local_weyl(a: int, b: int, p: int) -> np.ndarray:
    omega = np.exp(2j * np.pi / p)
    X = np.roll(np.eye(p), 1, axis=0)
    Z = np.diag(omega ** np.arange(p))
    a %= p
    b %= p
    if p == 2:
        phase = 1j if (a and b) else 1
        return phase * np.linalg.matrix_power(X, a) @ np.linalg.matrix_power(Z, b)
    tau = omega ** ((p + 1) // 2)
    return tau ** (-(a * b) % p) * np.linalg.matrix_power(X, a) @ np.linalg.matrix_power(Z, (-b) % p)


def weyl_operator(v: SympVector, cap: int = DEFAULT_CAP) -> np.ndarray:
    _check_cap(v.p, v.n, cap)
    out = np.ones((1, 1), dtype=complex)
    for a, b in v.pairs:
        out = np.kron(out, local_weyl(a, b, v.p))
    return out


def projector(C: SympCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Product over generators g of (1/p) sum_j W(g)^j.

    For odd p the Weyl map is a homomorphism on isotropic subspaces, so this
    equals |C|^-1 sum_{v in C} W(v); for p = 2 the product form fixes the
    signs that the Hermitian Paulis would otherwise get wrong.
    """
    dim = _check_cap(C.p, C.n, cap)
    if not is_self_orthogonal(C):
        raise DomainError("code is not self-orthogonal; the Weyl sum is not a projector")
    P = np.eye(dim, dtype=complex)
    for g in C.generators():
        W = weyl_operator(g, cap)
        avg = np.zeros_like(P)
        Wj = np.eye(dim, dtype=complex)
        for _ in range(C.p):
            avg += Wj
            Wj = Wj @ W
        P = P @ (avg / C.p)
    return P


def projector_by_sum(C: SympCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """|C|^-1 sum_{v in C} W(v) by direct enumeration (odd p)."""
    dim = _check_cap(C.p, C.n, cap)
    P = np.zeros((dim, dim), dtype=complex)
    for coeffs in product(range(C.p), repeat=C.dim):
        v = (np.array(coeffs, dtype=np.int64) @ C.gens) % C.p if C.dim else np.zeros(2 * C.n, np.int64)
        P += weyl_operator(SympVector(C.p, v), cap)
    return P / C.size


def errors_of_weight(p: int, n: int, w: int):
    """All pairs vectors of symplectic weight exactly w, in lexicographic order."""
    nonzero = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    for S in combinations(range(n), w):
        for locs in product(nonzero, repeat=w):
            v = np.zeros(2 * n, dtype=np.int64)
            for i, (a, b) in zip(S, locs):
                v[2 * i], v[2 * i + 1] = a, b
            yield SympVector(p, v)


@dataclass(frozen=True)
class KLResult:
    passed: bool
    checked: int
    max_residual: float
    witness: SympVector | None  # a weight-d error violating the conditions
    nonzero_lambda: tuple[SympVector, ...]  # errors of weight 1..d-1 with lambda_E != 0


def _kl_residual(P: np.ndarray, E: np.ndarray, K: float) -> tuple[float, complex]:
    PEP = P @ E @ P
    lam = np.trace(PEP) / K
    return float(np.abs(PEP - lam * P).max()), lam


def kl_check(P: np.ndarray, d: int, p: int, n: int, eps: float = EPS,
             cap: int = DEFAULT_CAP) -> KLResult:
    """Knill-Laflamme conditions for all errors of weight <= d - 1, plus a weight-d witness."""
    K = float(np.trace(P).real)
    checked = 0
    worst = 0.0
    failed = False
    lam_nonzero: list[SympVector] = []
    for w in range(0, d):
        for e in errors_of_weight(p, n, w):
            r, lam = _kl_residual(P, weyl_operator(e, cap), K)
            if eps <= r <= 10 * eps:
                raise DomainError(f"indeterminate residual {r:.3g} for error {e.pairs}")
            checked += 1
            worst = max(worst, r)
            failed |= r > eps
            if w > 0 and abs(lam) > 10 * eps:
                lam_nonzero.append(e)
    witness = None
    if d <= n:
        for e in errors_of_weight(p, n, d):
            r, _ = _kl_residual(P, weyl_operator(e, cap), K)
            if eps <= r <= 10 * eps:
                raise DomainError(f"indeterminate residual {r:.3g} for error {e.pairs}")
            if r > 10 * eps:
                witness = e
                break
    return KLResult(not failed, checked, worst, witness, tuple(lam_nonzero))
