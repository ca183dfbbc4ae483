"""Slow, independent reference computations used only by the tests.

Everything here is plain Python over tuples: spans are enumerated, duals are
found by testing every vector, and distances are read off directly.
"""

from itertools import product


def span(rows, p, length):
    rows = [tuple(r) for r in rows]
    out = set()
    for coeffs in product(range(p), repeat=len(rows)):
        v = [0] * length
        for c, r in zip(coeffs, rows):
            for i in range(length):
                v[i] = (v[i] + c * r[i]) % p
        out.add(tuple(v))
    return out


def symp_inner(v, w, p):
    return sum(v[2 * i] * w[2 * i + 1] - v[2 * i + 1] * w[2 * i] for i in range(len(v) // 2)) % p


def symp_weight(v):
    return sum(1 for i in range(len(v) // 2) if v[2 * i] or v[2 * i + 1])


def hamming_weight(v):
    return sum(1 for x in v if x)


def symp_dual(words, p, n):
    return {v for v in product(range(p), repeat=2 * n)
            if all(symp_inner(v, w, p) == 0 for w in words)}


def euclid_dual(words, p, n):
    return {v for v in product(range(p), repeat=n)
            if all(sum(a * b for a, b in zip(v, w)) % p == 0 for w in words)}


def distribution(words, n, weight=symp_weight):
    out = [0] * (n + 1)
    for v in words:
        out[weight(v)] += 1
    return out


def quantum_params(rows, p, n):
    """(k, d, pure_to) by brute force for a self-orthogonal code given by rows."""
    C = span(rows, p, 2 * n)
    D = symp_dual(C, p, n)
    assert C <= D
    k = n - (len(C).bit_length() - 1 if p == 2 else _log(len(C), p))
    nz = [symp_weight(v) for v in C if any(v)]
    pure_to = min(nz) if nz else n + 1
    if len(C) == len(D):
        d = pure_to
    else:
        d = min(symp_weight(v) for v in D - C)
    return k, d, pure_to


def _log(x, p):
    e = 0
    while x > 1:
        x //= p
        e += 1
    return e
