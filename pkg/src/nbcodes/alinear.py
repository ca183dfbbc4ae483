"""Codes invariant under a two-dimensional algebra A = GF(p)[X]/(X^2 - tX + d).

An element ``a + bX`` is identified with the pair ``(a, b)``; multiplication
by ``X`` acts on a pair row vector through the companion matrix
``[[0, 1], [-d, t]]``.  A pairs vector in V_n is therefore the same thing as
a vector in A^n, and a symplectic code is A-linear when it is closed under
that action.

Split and ramified algebras are first conjugated (coordinate-wise, by a
fixed 2x2 matrix) to the standard forms ``X^2 = X`` and ``X^2 = 0``.  The
conjugating matrix need not have determinant 1; it rescales the symplectic
form by a constant, which leaves duals, weights and self-orthogonality
unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Sequence

import numpy as np

from . import field, weights
from .errors import DomainError
from .sympcode import SympCode, dual, min_weight
from .weights import DEFAULT_BUDGET

Kind = Literal["inert", "split", "ramified"]


@dataclass(frozen=True)
class AlgElem:
    a: int
    b: int

    def __iter__(self):
        return iter((self.a, self.b))


@dataclass(frozen=True)
class TwoDimAlgebra:
    p: int
    t: int
    d: int
    kind: Kind

    @property
    def companion(self) -> np.ndarray:
        return np.array([[0, 1], [-self.d, self.t]], dtype=np.int64) % self.p

    def elem(self, a: int, b: int = 0) -> AlgElem:
        return AlgElem(a % self.p, b % self.p)

    def mul(self, x: AlgElem, y: AlgElem) -> AlgElem:
        a, b = mul_arrays(self, np.array(tuple(x)), np.array(tuple(y)))
        return AlgElem(int(a), int(b))

    def add(self, x: AlgElem, y: AlgElem) -> AlgElem:
        return self.elem(x.a + y.a, x.b + y.b)

    def conj(self, x: AlgElem) -> AlgElem:
        return self.elem(x.a + x.b * self.t, -x.b)

    def norm(self, x: AlgElem) -> int:
        return (x.a * x.a + x.a * x.b * self.t + x.b * x.b * self.d) % self.p

    def is_unit(self, x: AlgElem) -> bool:
        return self.norm(x) != 0

    def matrix(self, x: AlgElem) -> np.ndarray:
        """Right-multiplication matrix of ``x`` on pair row vectors."""
        return (x.a * np.eye(2, dtype=np.int64) + x.b * self.companion) % self.p

    @cached_property
    def standardizer(self) -> np.ndarray:
        """Matrix M with M^{-1} Y M standard, Y an affine reparametrisation of X.

        Split: Y idempotent, standard form has t=1, d=0.  Ramified: Y
        nilpotent, standard form has t=0, d=0.  Identity when already
        standard or inert.
        """
        p = self.p
        X = self.companion
        roots = field.roots_of_quadratic(self.t, self.d, p)
        I = np.eye(2, dtype=np.int64)
        if self.kind == "split":
            r1, r2 = roots
            if (r1, r2) == (0, 1) or (r1, r2) == (1, 0):
                if self.t % p == 1 and self.d % p == 0:
                    return I
            Y = ((X - r1 * I) * field.inv(r2 - r1, p)) % p
            m1 = field.kernel(Y, p)[0]
            u = field.kernel((Y - I) % p, p)[0]
            M = np.stack([m1, (u - m1) % p], axis=1)
        elif self.kind == "ramified":
            if self.t % p == 0 and self.d % p == 0:
                return I
            Y = (X - roots[0] * I) % p
            m2 = next(e for e in I if ((Y @ e) % p).any())
            M = np.stack([(Y @ m2) % p, m2], axis=1)
        else:
            return I
        return M % p


def classify(t: int, d: int, p: int) -> TwoDimAlgebra:
    """Kind of GF(p)[X]/(X^2 - tX + d), read off from its roots in GF(p)."""
    field.check_prime(p)
    roots = field.roots_of_quadratic(t, d, p)
    if not roots:
        kind: Kind = "inert"
    elif roots[0] == roots[1]:
        kind = "ramified"
    else:
        kind = "split"
    return TwoDimAlgebra(p, t % p, d % p, kind)


def classify_by_discriminant(t: int, d: int, p: int) -> Kind:
    """Odd-characteristic cross-check of :func:`classify` via the Legendre symbol."""
    s = field.legendre(t * t - 4 * d, p)
    return {-1: "inert", 0: "ramified", 1: "split"}[s]


STANDARD_SPLIT = (1, 0)
STANDARD_RAMIFIED = (0, 0)


def split_algebra(p: int) -> TwoDimAlgebra:
    return classify(1, 0, p)


def ramified_algebra(p: int) -> TwoDimAlgebra:
    return classify(0, 0, p)


# --- arrays of algebra elements, last axis (a, b) --------------------------

def mul_arrays(A: TwoDimAlgebra, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    a1, b1 = x[..., 0], x[..., 1]
    a2, b2 = y[..., 0], y[..., 1]
    bb = b1 * b2
    return np.stack([a1 * a2 - bb * A.d, a1 * b2 + b1 * a2 + bb * A.t], axis=-1) % A.p


def conj_arrays(A: TwoDimAlgebra, x: np.ndarray) -> np.ndarray:
    return np.stack([x[..., 0] + x[..., 1] * A.t, -x[..., 1]], axis=-1) % A.p


def conj(e: AlgElem, A: TwoDimAlgebra) -> AlgElem:
    return A.conj(e)


def as_alg_vector(v) -> np.ndarray:
    arr = np.array([tuple(x) if isinstance(x, AlgElem) else x for x in v], dtype=np.int64)
    return arr.reshape(-1, 2)


def hermitian_inner(v, w, A: TwoDimAlgebra) -> AlgElem:
    """sum_i v_i * conj(w_i), valued in A."""
    V, W = as_alg_vector(v), as_alg_vector(w)
    if V.shape != W.shape:
        raise DomainError("vectors differ in length")
    a, b = mul_arrays(A, V, conj_arrays(A, W)).sum(axis=0) % A.p
    return AlgElem(int(a), int(b))


def times_X(gens: np.ndarray, A: TwoDimAlgebra) -> np.ndarray:
    """Apply X coordinate-wise to interleaved pairs rows."""
    k = gens.shape[0]
    pairs = np.asarray(gens, dtype=np.int64).reshape(k, -1, 2)
    return (pairs @ A.companion).reshape(k, -1) % A.p


def to_symplectic(gens, A: TwoDimAlgebra) -> SympCode:
    """GF(p)-span of ``{g, gX}`` over the given A-vectors."""
    G = np.array([as_alg_vector(g).reshape(-1) for g in gens], dtype=np.int64)
    if G.size == 0:
        raise DomainError("need at least one generator")
    n = G.shape[1] // 2
    return SympCode(A.p, n, np.vstack([G, times_X(G, A)]))


def is_A_linear(C: SympCode, A: TwoDimAlgebra) -> bool:
    if C.p != A.p:
        raise DomainError("code and algebra have different characteristic")
    return C.dim == 0 or C.contains(times_X(C.gens, A))


def transform_pairs(C: SympCode, M: np.ndarray) -> SympCode:
    """Multiply every coordinate pair on the right by the 2x2 matrix M."""
    pairs = C.gens.reshape(C.dim, C.n, 2) @ np.asarray(M, dtype=np.int64)
    return SympCode(C.p, C.n, pairs.reshape(C.dim, 2 * C.n) % C.p)


# --- classical codes --------------------------------------------------------

class ClassicalCode:
    """A linear code in GF(p)^n held as an RREF generator matrix."""

    def __init__(self, p: int, n: int, gens=()) -> None:
        field.check_prime(p)
        self.p, self.n = p, n
        self.gens = field.row_basis(gens, p, n)
        if self.gens.shape[1] != n:
            raise DomainError(f"generators have {self.gens.shape[1]} columns, expected {n}")

    @classmethod
    def full(cls, p: int, n: int) -> ClassicalCode:
        return cls(p, n, np.eye(n, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.gens.shape[0]

    def dual(self) -> ClassicalCode:
        return ClassicalCode(self.p, self.n, field.kernel(self.gens, self.p, self.n))

    def contains(self, v) -> bool:
        return field.in_row_space(self.gens, v, self.p)

    def contains_code(self, other: ClassicalCode) -> bool:
        return field.in_row_space(self.gens, other.gens, self.p)

    def is_orthogonal_to(self, other: ClassicalCode) -> bool:
        return not ((self.gens @ other.gens.T) % self.p).any()

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ClassicalCode) and (self.p, self.n) == (other.p, other.n)
                and np.array_equal(self.gens, other.gens))

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.gens.tobytes()))

    def __repr__(self) -> str:
        return f"ClassicalCode(p={self.p}, n={self.n}, dim={self.dim})"


def classical_min_weight_outside(D: ClassicalCode, C: ClassicalCode | None = None,
                                 budget: int = DEFAULT_BUDGET) -> int | None:
    """Minimum weight of ``D - C`` (``C`` defaults to zero); ``None`` if the set is empty."""
    C = ClassicalCode(D.p, D.n) if C is None else C
    if not D.contains_code(C):
        raise DomainError("subcode is not contained in the code")
    if D.dim == C.dim:
        return None
    if D.p ** D.dim <= budget:
        W = field.complement_basis(D.gens, C.gens, D.p)
        return weights.min_weight_coset(W, C.gens, D.p, 1, budget=D.p ** D.dim)
    return weights.min_weight_support(D.gens, C.gens, D.p, 1)


def classical_min_distance(C: ClassicalCode, budget: int = DEFAULT_BUDGET) -> int | None:
    return classical_min_weight_outside(C, None, budget)


def _pairs(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    k, n = first.shape
    out = np.empty((k, 2 * n), dtype=np.int64)
    out[:, 0::2], out[:, 1::2] = first, second
    return out


def _parts(C: SympCode) -> tuple[np.ndarray, np.ndarray]:
    return C.gens[:, 0::2], C.gens[:, 1::2]


# --- split linear (CSS) ---------------------------------------------------

def css_build(C1: ClassicalCode, C2: ClassicalCode) -> SympCode:
    """Split-linear code with C X = C1 X and C (1 - X) = C2 (1 - X), for X^2 = X."""
    if C1.p != C2.p or C1.n != C2.n:
        raise DomainError("classical codes differ in field or length")
    if not C1.is_orthogonal_to(C2):
        raise DomainError("C1 is not contained in the dual of C2")
    p, n = C1.p, C1.n
    x_part = _pairs(np.zeros_like(C1.gens), C1.gens)
    one_minus_x = _pairs(C2.gens, (-C2.gens) % p)
    return SympCode(p, n, np.vstack([x_part, one_minus_x]))


def css_distance(C1: ClassicalCode, C2: ClassicalCode, budget: int = DEFAULT_BUDGET) -> int:
    """min(wt(C2^perp - C1), wt(C1^perp - C2)); falls back to nonzero weights when both are empty."""
    a = classical_min_weight_outside(C2.dual(), C1, budget)
    b = classical_min_weight_outside(C1.dual(), C2, budget)
    found = [x for x in (a, b) if x is not None]
    if found:
        return min(found)
    return min(x for x in (classical_min_distance(C2.dual(), budget),
                           classical_min_distance(C1.dual(), budget), C1.n + 1)
               if x is not None)


def split_extract(C: SympCode, A: TwoDimAlgebra | None = None) -> tuple[ClassicalCode, ClassicalCode]:
    """``(C1, C2)`` of a split-linear code."""
    A = split_algebra(C.p) if A is None else A
    if A.kind != "split" or not is_A_linear(C, A):
        raise DomainError("code is not split linear")
    Cs = transform_pairs(C, A.standardizer)
    a, b = _parts(Cs)
    return ClassicalCode(C.p, C.n, (a + b) % C.p), ClassicalCode(C.p, C.n, a)


def mat2_check(C: SympCode, A: TwoDimAlgebra | None = None) -> bool:
    C1, C2 = split_extract(C, A)
    return C1 == C2


def swap_idempotents(C: SympCode) -> SympCode:
    """Apply the element of Mat_2(p) exchanging ``aX + b(1-X)`` and ``a(1-X) + bX``.

    In standard split coordinates ``v1 X + v2 (1-X) -> (v2, v1 - v2)`` this is
    ``(x, y) -> (x + y, -y)``.
    """
    return transform_pairs(C, np.array([[1, 0], [1, -1]]) % C.p)


# --- ramified linear --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RamifiedData:
    """``C1 subset C0`` and lifts ``phi[i]`` in GF(p)^n for each row of C1's basis."""

    C1: ClassicalCode
    C0: ClassicalCode
    phi: np.ndarray

    def __post_init__(self) -> None:
        p, n = self.C1.p, self.C1.n
        phi = np.asarray(self.phi, dtype=np.int64).reshape(self.C1.dim, n) % p
        object.__setattr__(self, "phi", phi)
        if (self.C0.p, self.C0.n) != (p, n):
            raise DomainError("C1 and C0 differ in field or length")
        if not self.C0.contains_code(self.C1):
            raise DomainError("C1 is not contained in C0")
        if not self.C1.is_orthogonal_to(self.C0):
            raise DomainError("C1 is not orthogonal to C0")
        B = (self.C1.gens @ phi.T) % p
        if not np.array_equal(B, B.T):
            raise DomainError("phi violates the symmetry v.phi(w) = phi(v).w")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RamifiedData):
            return NotImplemented
        if self.C1 != other.C1 or self.C0 != other.C0:
            return False
        return self.C0.contains((self.phi - other.phi) % self.C1.p)


def ramified_build(data: RamifiedData, A: TwoDimAlgebra | None = None) -> SympCode:
    """span{v + phi(v) X : v in C1} + C0 X, for X^2 = 0, optionally mapped back to algebra A."""
    p, n = data.C1.p, data.C1.n
    rows = np.vstack([_pairs(data.C1.gens, data.phi),
                      _pairs(np.zeros_like(data.C0.gens), data.C0.gens)])
    C = SympCode(p, n, rows)
    if A is not None:
        if A.kind != "ramified":
            raise DomainError("algebra is not ramified")
        C = transform_pairs(C, field.inverse(A.standardizer, p))
    return C


def ramified_extract(C: SympCode, A: TwoDimAlgebra | None = None) -> RamifiedData:
    A = ramified_algebra(C.p) if A is None else A
    if A.kind != "ramified":
        raise DomainError("algebra is not ramified")
    if not is_A_linear(C, A):
        raise DomainError("code is not A-linear")
    p, n = C.p, C.n
    Cs = transform_pairs(C, A.standardizer)
    a, b = _parts(Cs)
    C1 = ClassicalCode(p, n, a)
    # C0: second halves of the words whose first half vanishes
    X = field.kernel(a.T, p, Cs.dim)
    C0 = ClassicalCode(p, n, (X @ b) % p if X.size else np.zeros((0, n), dtype=np.int64))
    phi = np.zeros((C1.dim, n), dtype=np.int64)
    R, _, piv = field.rref(np.hstack([a, np.eye(Cs.dim, dtype=np.int64)]), p)
    for i, v in enumerate(C1.gens):
        # solve x . a = v using the augmented RREF
        coeffs = np.zeros(Cs.dim, dtype=np.int64)
        for j, c in enumerate(piv):
            if c >= n:
                break
            coeffs = (coeffs + v[c] * R[j, n:]) % p
        if not np.array_equal((coeffs @ a) % p, v):
            raise DomainError("internal: failed to lift a C1 generator")
        phi[i] = (coeffs @ b) % p
    return RamifiedData(C1, C0, phi)


def ramified_distance_bounds(data: RamifiedData, budget: int = DEFAULT_BUDGET) -> tuple[int | None, int | None]:
    """``(wt(C0^perp - C1), wt(C1^perp - C0))``; ``None`` marks an empty set."""
    lo = classical_min_weight_outside(data.C0.dual(), data.C1, budget)
    hi = classical_min_weight_outside(data.C1.dual(), data.C0, budget)
    return lo, hi


# --- puncture codes ---------------------------------------------------------

def componentwise_products(C: SympCode) -> np.ndarray:
    """Rows ``{g_i, g_j}`` of coordinate-wise symplectic products over generator pairs i < j."""
    a, b = _parts(C)
    rows = [(a[i] * b[j] - b[i] * a[j]) % C.p
            for i in range(C.dim) for j in range(i + 1, C.dim)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), C.n)


def puncture_code(C: SympCode) -> ClassicalCode:
    span = ClassicalCode(C.p, C.n, componentwise_products(C))
    return span.dual()


def shorten(C: SympCode, c) -> SympCode:
    """Rescale coordinate i by diag(c_i, 1) and drop the coordinates where c_i = 0."""
    p, n = C.p, C.n
    c = np.asarray(c, dtype=np.int64).reshape(-1) % p
    if c.size != n:
        raise DomainError("puncture word has the wrong length")
    if not c.any():
        raise DomainError("zero puncture word gives an empty code")
    if not puncture_code(C).contains(c):
        raise DomainError("word is not in the puncture code")
    keep = np.nonzero(c)[0]
    pairs = C.gens.reshape(C.dim, n, 2)[:, keep, :].copy()
    pairs[:, :, 0] = (pairs[:, :, 0] * c[keep]) % p
    return SympCode(p, keep.size, pairs.reshape(C.dim, 2 * keep.size))


def puncture_dual_norms(C: SympCode, A: TwoDimAlgebra) -> ClassicalCode:
    """Span of componentwise norms of all words of C.

    By polarisation that span is generated by the norms of the basis vectors
    and of their pairwise sums.
    """
    if A.kind == "ramified":
        raise DomainError("norm description needs a nondegenerate trace form (inert or split)")
    if not is_A_linear(C, A):
        raise DomainError("code is not A-linear")
    G = C.gens
    sums = [G] + [(G[i] + G[i + 1:]) % C.p for i in range(C.dim)]
    words = np.vstack(sums) if C.dim else G
    return ClassicalCode(C.p, C.n, componentwise_norms(words, A))


def componentwise_norms(words: np.ndarray, A: TwoDimAlgebra) -> np.ndarray:
    """N(a + bX) = a^2 + abt + b^2 d at every coordinate of interleaved rows."""
    a, b = words[:, 0::2], words[:, 1::2]
    return (a * a + a * b * A.t + b * b * A.d) % A.p


def shortened_dual_distance(C: SympCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum nonzero weight of the symplectic dual, ``n + 1`` when it is zero."""
    return min_weight(dual(C), budget)


# --- random instances -------------------------------------------------------

def random_self_orthogonal_classical(p: int, n: int, dim: int, rng: np.random.Generator,
                                     max_tries: int = 200) -> ClassicalCode:
    """Random Euclidean self-orthogonal code of dimension at most ``dim``.

    Grown one vector at a time from inside the current dual; stops early when
    no isotropic extension turns up within ``max_tries`` draws.
    """
    C = ClassicalCode(p, n)
    for _ in range(max_tries):
        if C.dim == dim:
            break
        D = C.dual()
        v = (rng.integers(0, p, D.dim) @ D.gens) % p
        if v.any() and (v @ v) % p == 0 and not C.contains(v):
            C = ClassicalCode(p, n, np.vstack([C.gens, v]))
    return C


def random_ramified_data(p: int, n: int, rng: np.random.Generator) -> RamifiedData:
    """Random valid (C1, C0, phi): C1 self-orthogonal, C1 in C0 in C1^perp, phi symmetric."""
    C1 = random_self_orthogonal_classical(p, n, int(rng.integers(0, n // 2 + 1)), rng)
    perp = C1.dual()
    extra = int(rng.integers(0, perp.dim - C1.dim + 1))
    more = (rng.integers(0, p, (extra, perp.dim)) @ perp.gens) % p
    C0 = ClassicalCode(p, n, np.vstack([C1.gens, more]))
    k = C1.dim
    S = rng.integers(0, p, (k, k))
    S = (np.triu(S) + np.triu(S, 1).T) % p
    phi = np.zeros((k, n), dtype=np.int64)
    if k:
        # C1.gens is in RREF: placing S[:, i] on the pivot columns gives C1 . phi_i = S[:, i]
        piv = field.rref(C1.gens, p)[2]
        K = field.kernel(C1.gens, p, n)
        for i in range(k):
            phi[i, piv] = S[:, i]
            if K.shape[0]:
                phi[i] = (phi[i] + rng.integers(0, p, K.shape[0]) @ K) % p
    return RamifiedData(C1, C0, phi)


def random_A_linear(A: TwoDimAlgebra, n: int, rank: int, rng: np.random.Generator) -> SympCode:
    """Span of ``rank`` random A-vectors and their X-images."""
    return to_symplectic(rng.integers(0, A.p, (rank, n, 2)), A)
