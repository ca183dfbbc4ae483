"""Exact arithmetic in O = Z[delta], delta = (1 + sqrt(p')) / 2, p' = 1 mod 4.

Builds the quadratic-residue O-module generated by (x - 1) nu(x) in
O[x]/(x^p' - 1), reduces it modulo primes p to symplectic codes, and finds
the primes at which the reduced dual drops below a target distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

import numpy as np
import sympy

from . import field
from .alinear import TwoDimAlgebra, classify
from .errors import DomainError
from .sympcode import CodeParams, SympCode

DEFAULT_MAX_PPRIME = 17


@dataclass(frozen=True)
class QuadRing:
    pprime: int

    def __post_init__(self) -> None:
        if not field.is_prime(self.pprime) or self.pprime % 4 != 1:
            raise DomainError(f"{self.pprime} is not a prime congruent to 1 mod 4")

    @property
    def m(self) -> int:
        """delta^2 = delta + m."""
        return (self.pprime - 1) // 4

    def __call__(self, a: int, b: int = 0) -> QuadElem:
        return QuadElem(a, b, self)

    @property
    def delta(self) -> QuadElem:
        return QuadElem(0, 1, self)

    @property
    def zero(self) -> QuadElem:
        return QuadElem(0, 0, self)

    @property
    def one(self) -> QuadElem:
        return QuadElem(1, 0, self)


@dataclass(frozen=True)
class QuadElem:
    """a + b * delta."""

    a: int
    b: int
    ring: QuadRing

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.ring != self.ring:
                raise DomainError("elements of different rings")
            return other
        if isinstance(other, int):
            return QuadElem(other, 0, self.ring)
        return NotImplemented

    def __add__(self, other) -> QuadElem:
        o = self._coerce(other)
        return QuadElem(self.a + o.a, self.b + o.b, self.ring)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.a, -self.b, self.ring)

    def __sub__(self, other) -> QuadElem:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QuadElem:
        return self._coerce(other) - self

    def __mul__(self, other) -> QuadElem:
        o = self._coerce(other)
        bb = self.b * o.b
        return QuadElem(self.a * o.a + bb * self.ring.m, self.a * o.b + self.b * o.a + bb, self.ring)

    __rmul__ = __mul__

    def conj(self) -> QuadElem:
        return QuadElem(self.a + self.b, -self.b, self.ring)

    def norm(self) -> int:
        return self.a * self.a + self.a * self.b - self.b * self.b * self.ring.m

    def trace(self) -> int:
        return 2 * self.a + self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def exact_div(self, other: QuadElem) -> QuadElem:
        """self / other, which must lie in O."""
        N = other.norm()
        q = self * other.conj()
        if N == 0 or q.a % N or q.b % N:
            raise DomainError("division is not exact in O")
        return QuadElem(q.a // N, q.b // N, self.ring)

    def __str__(self) -> str:
        return f"{self.a}+{self.b}*delta"


# --- polynomials with O coefficients, lowest degree first -------------------

OPoly = list  # list[QuadElem]


def opoly_mul(f: Sequence[QuadElem], g: Sequence[QuadElem]) -> list[QuadElem]:
    ring = f[0].ring
    out = [ring.zero] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = out[i + j] + x * y
    return opoly_trim(out)


def opoly_trim(f: Sequence[QuadElem]) -> list[QuadElem]:
    out = list(f)
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def opoly_conj(f: Sequence[QuadElem]) -> list[QuadElem]:
    return [c.conj() for c in f]


def quadratic_residues(pprime: int) -> set[int]:
    return {x * x % pprime for x in range(1, pprime)}


def _as_quad(c: np.ndarray, ring: QuadRing, residues: set[int]) -> QuadElem:
    """Express a QR-invariant element of Z[zeta] as a + b * (delta - 1).

    ``c`` holds group-ring coefficients of zeta^0..zeta^{p'-1}; the
    representation is unique modulo the all-ones vector.  With eta the sum
    of zeta^r over residues r, eta = delta - 1 and the nonresidue sum is
    -1 - eta.
    """
    q = ring.pprime
    cr = {int(c[r]) for r in residues}
    cn = {int(c[r]) for r in range(1, q) if r not in residues}
    if len(cr) != 1 or len(cn) != 1:
        raise DomainError("internal: coefficient is not invariant under the residues")
    c0, r_, n_ = int(c[0]), cr.pop(), cn.pop()
    # c0 + r_ eta + n_ (-1 - eta) = (c0 - n_) + (r_ - n_)(delta - 1)
    return QuadElem(c0 - r_, r_ - n_, ring)


def nu_poly(ring: QuadRing) -> list[QuadElem]:
    """nu(x) = prod over quadratic residues r of (x - zeta^r), coefficients in O."""
    q = ring.pprime
    R = sorted(quadratic_residues(q))
    # polynomial in x with coefficients in Z[C_q], shape (deg+1, q)
    poly = np.zeros((1, q), dtype=object)
    poly[0, 0] = 1
    for r in R:
        shifted = np.zeros((poly.shape[0] + 1, q), dtype=object)
        shifted[1:] += poly
        shifted[:-1] -= np.roll(poly, r, axis=1)
        poly = shifted
    nu = [_as_quad(row, ring, set(R)) for row in poly]
    check = opoly_mul(opoly_mul([ring(-1), ring(1)], nu), opoly_conj(nu))
    expected = [ring(-1)] + [ring.zero] * (q - 1) + [ring(1)]
    if check != expected:
        raise DomainError("internal: (x-1) nu conj(nu) != x^p' - 1")
    return nu


@dataclass(frozen=True, eq=False)
class OModuleCode:
    ring: QuadRing
    n: int
    rows: tuple[tuple[QuadElem, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> list[QuadElem]:
        return [r[j] for r in self.rows]


def qr_module(ring: QuadRing, max_pprime: int = DEFAULT_MAX_PPRIME) -> OModuleCode:
    q = ring.pprime
    if q > max_pprime:
        raise DomainError(f"p' = {q} exceeds the cap {max_pprime}")
    g = opoly_mul([ring(-1), ring(1)], nu_poly(ring))
    k = (q - 1) // 2
    rows = []
    for i in range(k):
        row = [ring.zero] * q
        for j, c in enumerate(g):
            row[i + j] = c
        rows.append(tuple(row))
    return OModuleCode(ring, q, tuple(rows))


def hermitian_gram(M: OModuleCode) -> list[list[QuadElem]]:
    ring = M.ring
    G = []
    for v in M.rows:
        G.append([sum((x * y.conj() for x, y in zip(v, w)), ring.zero) for w in M.rows])
    return G


def is_hermitian_self_orthogonal(M: OModuleCode) -> bool:
    """Every pair of generators is orthogonal under v . conj(w)."""
    return all(e.is_zero() for row in hermitian_gram(M) for e in row)


def reduction_algebra(ring: QuadRing, p: int) -> TwoDimAlgebra:
    """Image of O mod p: X = delta with trace 1 and norm -m."""
    return classify(ring.delta.trace(), ring.delta.norm(), p)


def reduce_mod_p(M: OModuleCode, p: int) -> SympCode:
    """Each O-row g contributes g and delta*g, read as pairs (a_i, b_i) mod p."""
    field.check_prime(p)
    rows = []
    for g in M.rows:
        for h in (g, tuple(M.ring.delta * x for x in g)):
            rows.append([v for x in h for v in (x.a % p, x.b % p)])
    return SympCode(p, M.n, np.array(rows, dtype=np.int64).reshape(len(rows), 2 * M.n))


def splitting_type(ring: QuadRing, p: int) -> str:
    """How p splits in O: ``ramified`` iff p = p', else by the Legendre symbol (p odd)."""
    if p == ring.pprime:
        return "ramified"
    if p == 2:
        # x^2 - x - m mod 2 splits iff m is even
        return "split" if ring.m % 2 == 0 else "inert"
    return "split" if field.legendre(ring.pprime, p) == 1 else "inert"


# --- ideals -----------------------------------------------------------------

def ideal_norm(gens: Iterable[QuadElem]) -> int:
    """Index [O : I] of the ideal generated by ``gens``; 0 for the zero ideal.

    The ideal is the Z-lattice spanned by g and delta*g; its index in Z^2 is
    the gcd of the 2x2 minors of those coordinate vectors.
    """
    vecs = []
    for g in gens:
        if g.is_zero():
            continue
        dg = g.ring.delta * g
        vecs += [(g.a, g.b), (dg.a, dg.b)]
    idx = 0
    for (a, b), (c, d) in combinations(vecs, 2):
        idx = gcd(idx, a * d - b * c)
    return abs(idx)


def det_O(M: list[list[QuadElem]]) -> QuadElem:
    """Determinant over O by fraction-free (Bareiss) elimination."""
    n = len(M)
    ring = M[0][0].ring
    A = [list(r) for r in M]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return ring.zero
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]).exact_div(prev)
        prev = A[k][k]
    return A[n - 1][n - 1] * sign


def minor_ideal_norm(M: OModuleCode, S: Sequence[int]) -> int:
    """Norm of I_S, the ideal of all |S| x |S| minors of the columns S."""
    size = len(S)
    if size > M.rank:
        return 0
    sub = [[row[j] for j in S] for row in M.rows]
    minors = (det_O([sub[i] for i in rows]) for rows in combinations(range(M.rank), size))
    return ideal_norm(minors)


def bad_primes(M: OModuleCode, d: int) -> set[int]:
    """Primes at which the reduced dual has a nonzero word of weight below ``d``."""
    if d < 2:
        return set()
    bad: set[int] = set()
    norms: set[int] = set()
    for S in combinations(range(M.n), d - 1):
        N = minor_ideal_norm(M, S)
        if N == 0:
            raise DomainError(f"distance {d} is never attained (I_S = 0 for S = {S})")
        norms.add(N)
    for N in norms:
        bad.update(sympy.factorint(N).keys())
    return bad


def composite_alphabet(params: Sequence[CodeParams]) -> CodeParams:
    """Direct sum of per-prime ((n, alpha_i^k, d_i)) codes: alphabet prod(alpha_i)."""
    if not params:
        raise DomainError("need at least one code")
    n, k = params[0].n, params[0].k
    if any(c.n != n or c.k != k for c in params):
        raise DomainError("codes differ in length or number of encoded letters")
    alphabet = 1
    for c in params:
        alphabet *= c.alphabet
    return CodeParams(n=n, k=k, d=min(c.d for c in params),
                      pure_to=min(c.pure_to for c in params), alphabet=alphabet)
