"""Exhaustive weight enumeration over GF(p) row spaces.

Two kinds of weight are supported through ``group``: ``group=1`` is the
Hamming weight of a vector in GF(p)^n, ``group=2`` is the symplectic weight
of an interleaved pairs vector ``(a_1, b_1, a_2, b_2, ...)``.

Enumerations walk mixed-radix coefficient counters in chunks and use
projective normalisation (leading coefficient 1), since scaling by a
nonzero scalar preserves both weight and membership in a subspace.  Any
index range ``[start, stop)`` of a counter can be evaluated on its own, so
work can be split into disjoint ranges and combined by min or sum.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import field
from .errors import DomainError, ResourceError

DEFAULT_BUDGET = 10**8
_CHUNK_ELEMS = 1 << 22


def word_weights(words: np.ndarray, group: int) -> np.ndarray:
    if group == 1:
        return np.count_nonzero(words, axis=1)
    N, cols = words.shape
    return np.count_nonzero(words.reshape(N, cols // group, group).any(axis=2), axis=1)


def coefficients(start: int, stop: int, dim: int, p: int) -> np.ndarray:
    """Base-p digit vectors (least significant first) of the integers in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, dim), dtype=np.float64)
    for k in range(dim):
        out[:, k] = idx % p
        idx //= p
    return out


def _words(offset: np.ndarray, G: np.ndarray, start: int, stop: int, p: int) -> np.ndarray:
    if G.shape[0] == 0:
        return np.broadcast_to(offset, (stop - start, offset.size)).astype(np.int64)
    # float64 matmul is exact here: entries < p and dim*p^2 << 2^53
    coeffs = coefficients(start, stop, G.shape[0], p)
    words = coeffs @ G.astype(np.float64) + offset
    return np.fmod(words, p).astype(np.int64)


def _chunk_rows(cols: int) -> int:
    return max(1, _CHUNK_ELEMS // max(cols, 1))


def projective_count(outside_dim: int, inside_dim: int, p: int) -> int:
    return (p**outside_dim - 1) // (p - 1) * p**inside_dim


def min_weight_coset(W, Cb, p: int, group: int, budget: int = DEFAULT_BUDGET,
                     floor: int = 1) -> int:
    """Minimum weight of ``x W + y Cb`` over all ``x != 0`` and all ``y``.

    ``floor`` is a known lower bound; the search stops as soon as it is hit.
    """
    W = np.asarray(W, dtype=np.int64)
    Cb = np.asarray(Cb, dtype=np.int64).reshape(-1, W.shape[1])
    w, c = W.shape[0], Cb.shape[0]
    if w == 0:
        raise DomainError("empty set: no words outside the subcode")
    total = projective_count(w, c, p)
    if total > budget:
        raise ResourceError(f"enumeration of {total} words exceeds budget {budget}")
    cols = W.shape[1]
    best = cols // group + 1
    rows = _chunk_rows(cols)
    for j in range(w):
        G = np.vstack([W[j + 1:], Cb])
        count = p ** G.shape[0]
        for s in range(0, count, rows):
            wts = word_weights(_words(W[j], G, s, min(count, s + rows), p), group)
            best = min(best, int(wts.min()))
            if best <= floor:
                return best
    return best


def weight_counts(G, p: int, group: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Exact number of words of each weight in the row space of ``G`` (independent rows)."""
    G = np.asarray(G, dtype=np.int64)
    dim, cols = G.shape
    n = cols // group
    if p**dim > budget:
        raise ResourceError(f"enumeration of {p**dim} words exceeds budget {budget}")
    counts = np.zeros(n + 1, dtype=np.int64)
    counts[0] = 1
    rows = _chunk_rows(cols)
    for j in range(dim):
        rest = G[j + 1:]
        count = p ** rest.shape[0]
        for s in range(0, count, rows):
            wts = word_weights(_words(G[j], rest, s, min(count, s + rows), p), group)
            counts += np.bincount(wts, minlength=n + 1)
    return [int(x) * (p - 1) if i else 1 for i, x in enumerate(counts)]


def min_weight_support(D, C, p: int, group: int, max_weight: int | None = None) -> int:
    """Minimum weight of ``D - C`` by growing support sets.

    For each support ``S`` of size ``w`` the subspace of ``D`` supported
    inside ``S`` is found by linear algebra; the first ``w`` at which that
    subspace escapes ``C`` is the answer.
    """
    Db = field.row_basis(D, p)
    cols = Db.shape[1]
    Cb = field.row_basis(C, p, cols)
    n = cols // group
    if Db.shape[0] == Cb.shape[0]:
        raise DomainError("empty set: no words outside the subcode")
    top = n if max_weight is None else min(n, max_weight)
    for w in range(1, top + 1):
        for S in combinations(range(n), w):
            keep = np.zeros(n, dtype=bool)
            keep[list(S)] = True
            outside = np.repeat(~keep, group)
            if outside.any():
                X = field.kernel(Db[:, outside].T, p)
            else:
                X = np.eye(Db.shape[0], dtype=np.int64)
            if X.shape[0] == 0:
                continue
            sub = (X @ Db) % p
            if not field.in_row_space(Cb, sub, p):
                return w
    raise ResourceError(f"no word outside the subcode up to weight {top}")
