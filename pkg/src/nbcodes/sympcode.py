"""Symplectic codes over V_n = (GF(p) x GF(p))^n.

Vectors are stored interleaved as ``(a_1, b_1, a_2, b_2, ...)``.  A code is
kept in canonical form, the RREF of its generator matrix in that column
order, so two codes are equal exactly when their canonical matrices are.

The ``[[n, k, d]]_p`` convention used throughout is ``k = n - dim C``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal, Sequence

import numpy as np

from . import field, weights
from .errors import DomainError
from .weights import DEFAULT_BUDGET


@dataclass(frozen=True, eq=False)
class SympVector:
    p: int
    data: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.data, dtype=np.int64).reshape(-1) % self.p
        if arr.size % 2:
            raise DomainError("pairs vector must have even length")
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]], p: int) -> SympVector:
        return cls(p, np.array(pairs, dtype=np.int64).reshape(-1))

    @property
    def n(self) -> int:
        return self.data.size // 2

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in self.data.reshape(-1, 2)]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SympVector) and self.p == other.p
                and np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.p, self.data.tobytes()))


class SympCode:
    """A GF(p)-subspace of V_n held in canonical RREF."""

    def __init__(self, p: int, n: int, gens=()) -> None:
        field.check_prime(p)
        self.p = p
        self.n = n
        self.gens = field.row_basis(gens, p, 2 * n)
        if self.gens.shape[1] != 2 * n:
            raise DomainError(f"generators have {self.gens.shape[1]} columns, expected {2 * n}")
        self.gens.setflags(write=False)

    @classmethod
    def from_pairs(cls, rows: Sequence[Sequence[tuple[int, int]]], p: int) -> SympCode:
        n = len(rows[0]) if rows else 0
        return cls(p, n, np.array(rows, dtype=np.int64).reshape(len(rows), 2 * n))

    @classmethod
    def zero(cls, p: int, n: int) -> SympCode:
        return cls(p, n)

    @classmethod
    def full(cls, p: int, n: int) -> SympCode:
        return cls(p, n, np.eye(2 * n, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.gens.shape[0]

    @property
    def size(self) -> int:
        return self.p**self.dim

    def generators(self) -> list[SympVector]:
        return [SympVector(self.p, g) for g in self.gens]

    def contains(self, v) -> bool:
        data = v.data if isinstance(v, SympVector) else v
        return field.in_row_space(self.gens, data, self.p)

    def contains_code(self, other: SympCode) -> bool:
        return field.in_row_space(self.gens, other.gens, self.p)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SympCode) and (self.p, self.n) == (other.p, other.n)
                and np.array_equal(self.gens, other.gens))

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.gens.tobytes()))

    def __repr__(self) -> str:
        return f"SympCode(p={self.p}, n={self.n}, dim={self.dim})"


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    pure_to: int
    alphabet: int

    @property
    def is_pure(self) -> bool:
        return self.pure_to >= self.d

    @property
    def K(self) -> int:
        return self.alphabet**self.k

    def as_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "pure_to": self.pure_to,
                "pure": self.is_pure, "alphabet": self.alphabet}


@dataclass(frozen=True)
class WeightDist:
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)


def symp_form(n: int) -> np.ndarray:
    """Gram matrix J of the symplectic form on interleaved coordinates."""
    J = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


def symp_weight(v: SympVector) -> int:
    return int(np.count_nonzero(v.data.reshape(-1, 2).any(axis=1)))


def symp_inner(v: SympVector, w: SympVector) -> int:
    if v.p != w.p or v.n != w.n:
        raise DomainError("vectors differ in modulus or length")
    a, b = v.data[0::2], v.data[1::2]
    a2, b2 = w.data[0::2], w.data[1::2]
    return int((a @ b2 - b @ a2) % v.p)


def gram(C: SympCode, D: SympCode | None = None) -> np.ndarray:
    D = C if D is None else D
    return (C.gens @ symp_form(C.n) @ D.gens.T) % C.p


def dual(C: SympCode) -> SympCode:
    M = (C.gens @ symp_form(C.n)) % C.p
    return SympCode(C.p, C.n, field.kernel(M, C.p, 2 * C.n))


def is_self_orthogonal(C: SympCode) -> bool:
    return not gram(C).any()


def offending_pair(C: SympCode) -> tuple[int, int] | None:
    """First generator index pair with nonzero inner product, if any."""
    nz = np.argwhere(gram(C))
    return (int(nz[0][0]), int(nz[0][1])) if nz.size else None


def min_weight_outside(D: SympCode, C: SympCode, budget: int = DEFAULT_BUDGET,
                       method: Literal["auto", "enumerate", "support"] = "auto") -> int:
    """Minimum symplectic weight of a word of ``D`` not in ``C``."""
    if not D.contains_code(C):
        raise DomainError("subcode is not contained in the code")
    if D.dim == C.dim:
        raise DomainError("empty set: the codes are equal")
    if method == "auto":
        method = "enumerate" if D.size <= budget else "support"
    if method == "enumerate":
        W = field.complement_basis(D.gens, C.gens, D.p)
        return weights.min_weight_coset(W, C.gens, D.p, 2, budget=max(budget, D.size))
    return weights.min_weight_support(D.gens, C.gens, D.p, 2)


def min_weight(C: SympCode, budget: int = DEFAULT_BUDGET, method="auto") -> int:
    """Minimum nonzero weight; ``n + 1`` for the zero code."""
    if C.dim == 0:
        return C.n + 1
    return min_weight_outside(C, SympCode.zero(C.p, C.n), budget, method)


def parameters(C: SympCode, budget: int = DEFAULT_BUDGET) -> CodeParams:
    if not is_self_orthogonal(C):
        raise DomainError(f"not self-orthogonal: generator pair {offending_pair(C)}")
    D = dual(C)
    pure_to = min_weight(C, budget)
    if D.dim == C.dim:
        # self-dual: distance is the minimum nonzero weight, hence always pure
        d = pure_to
    else:
        d = min_weight_outside(D, C, budget)
    return CodeParams(n=C.n, k=C.n - C.dim, d=d, pure_to=pure_to, alphabet=C.p)


def weight_distribution(C: SympCode, budget: int = DEFAULT_BUDGET) -> WeightDist:
    return WeightDist(tuple(weights.weight_counts(C.gens, C.p, 2, budget)))


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum((-1)**s * (q - 1)**(j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(j + 1))


def macwilliams(A: WeightDist, size: int, p: int, n: int) -> WeightDist:
    """Weight distribution of the symplectic dual from that of the code."""
    q = p * p
    out = []
    for j in range(n + 1):
        total = Fraction(sum(A[i] * krawtchouk(j, i, n, q) for i in range(n + 1)), size)
        if total.denominator != 1:
            raise DomainError("input is not the distribution of a subspace")
        out.append(int(total))
    return WeightDist(tuple(out))


SingletonStatus = Literal["violated", "strict", "mds"]


def singleton_check(params: CodeParams) -> SingletonStatus:
    n, k, d = params.n, params.k, params.d
    if k > 0:
        bound = n - 2 * d + 2
        if k > bound:
            return "violated"
        return "mds" if k == bound else "strict"
    if not params.is_pure:
        return "strict"
    if 2 * d > n + 2:
        return "violated"
    return "mds" if 2 * d == n + 2 else "strict"


def quantum_enumerators(C: SympCode, budget: int = DEFAULT_BUDGET) -> tuple[list[int], list[int]]:
    """``(A, B)`` with ``A_i = K^2 #C_i`` and ``B_i = K #C^perp_i``, ``K = p^(n - dim C)``."""
    K = C.p ** (C.n - C.dim)
    A = weight_distribution(C, budget)
    B = macwilliams(A, C.size, C.p, C.n)
    return [K * K * a for a in A.counts], [K * b for b in B.counts]


def unitary_coeff(X: Sequence[int], j: int, alpha: int, n: int) -> Fraction:
    """alpha^(j-n) * sum_{i <= n-j} C(n-i, j) (alpha-1)^i X_i, exactly."""
    s = sum(comb(n - i, j) * (alpha - 1)**i * X[i] for i in range(n - j + 1))
    return Fraction(s) * Fraction(alpha) ** (j - n)


def apply_equivalence(C: SympCode, perm: Sequence[int], locals_: Sequence) -> SympCode:
    """Permute coordinates and act by a determinant-1 local matrix on each.

    Output coordinate ``i`` is input coordinate ``perm[i]`` after it has been
    multiplied on the right by ``locals_[perm[i]]``.
    """
    p, n = C.p, C.n
    if sorted(perm) != list(range(n)) or len(locals_) != n:
        raise DomainError("need a permutation of n coordinates and n local matrices")
    mats = [np.asarray(L, dtype=np.int64) % p for L in locals_]
    for L in mats:
        if (L[0, 0] * L[1, 1] - L[0, 1] * L[1, 0]) % p != 1:
            raise DomainError("local matrix does not have determinant 1")
    pairs = C.gens.reshape(C.dim, n, 2)
    moved = np.stack([pairs[:, i, :] @ mats[i] for i in range(n)], axis=1) % p
    out = moved[:, list(perm), :]
    return SympCode(p, n, out.reshape(C.dim, 2 * n))


def random_self_orthogonal(p: int, n: int, dim: int, rng: np.random.Generator,
                           max_tries: int = 1000) -> SympCode:
    """Random isotropic subspace grown one vector at a time from inside the current dual."""
    if dim > n:
        raise DomainError("isotropic subspaces have dimension at most n")
    C = SympCode.zero(p, n)
    tries = 0
    while C.dim < dim:
        tries += 1
        if tries > max_tries:
            raise DomainError("failed to extend isotropic subspace")
        D = dual(C)
        v = (rng.integers(0, p, D.dim) @ D.gens) % p
        if not C.contains(v):
            C = SympCode(p, n, np.vstack([C.gens, v]))
    return C


def random_code(p: int, n: int, dim: int, rng: np.random.Generator) -> SympCode:
    while True:
        C = SympCode(p, n, rng.integers(0, p, (dim, 2 * n)))
        if C.dim == dim:
            return C
