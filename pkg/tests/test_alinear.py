import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nbcodes import alinear as al, field
from nbcodes import sympcode as sc
from nbcodes.alinear import ClassicalCode
from nbcodes.errors import DomainError

import oracles

algebras = st.tuples(st.sampled_from([2, 3, 5, 7]), st.integers(0, 6), st.integers(0, 6))


def _rows(C):
    return [tuple(int(x) for x in r) for r in C.gens]


def hamming_dual():
    """The [7,3] simplex code; its dual is the Hamming [7,4] code."""
    return ClassicalCode(2, 7, [[1, 0, 0, 1, 1, 0, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 0, 1, 1, 1]])


@given(algebras)
def test_classification_by_root_count(tdp):
    p, t, d = tdp
    A = al.classify(t, d, p)
    roots = {x for x in range(p) if (x * x - t * x + d) % p == 0}
    want = {0: "inert", 1: "ramified", 2: "split"}[len(roots)]
    assert A.kind == want
    if p > 2:
        assert al.classify_by_discriminant(t, d, p) == want


@given(algebras, st.data())
def test_algebra_arithmetic(tdp, data):
    p, t, d = tdp
    A = al.classify(t, d, p)
    el = st.builds(A.elem, st.integers(0, p - 1), st.integers(0, p - 1))
    x, y = data.draw(el), data.draw(el)
    # multiplication agrees with products of right-multiplication matrices
    assert np.array_equal(A.matrix(A.mul(x, y)), (A.matrix(x) @ A.matrix(y)) % p)
    assert A.norm(A.mul(x, y)) == A.norm(x) * A.norm(y) % p
    assert A.conj(A.conj(x)) == x
    assert A.mul(x, A.conj(x)) == A.elem(A.norm(x))
    X = A.elem(0, 1)
    assert A.mul(X, X) == A.elem(-d, t)


@given(algebras)
def test_standardizer_conjugates_to_standard_form(tdp):
    p, t, d = tdp
    A = al.classify(t, d, p)
    M = A.standardizer
    Mi = field.inverse(M, p)
    conj = (Mi @ A.companion @ M) % p
    if A.kind == "split":
        # X is an affine image of the idempotent E, so conj lies in span{1, E}
        E = al.split_algebra(p).companion
        assert any(np.array_equal(conj, (a * np.eye(2, dtype=np.int64) + b * E) % p)
                   for a in range(p) for b in range(1, p))
    elif A.kind == "ramified":
        N = al.ramified_algebra(p).companion
        assert any(np.array_equal(conj, (a * np.eye(2, dtype=np.int64) + b * N) % p)
                   for a in range(p) for b in range(1, p))


@given(algebras, st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_A_linear_codes(tdp, seed):
    p, t, d = tdp
    A = al.classify(t, d, p)
    rng = np.random.default_rng(seed)
    C = al.random_A_linear(A, 3, 1, rng)
    assert al.is_A_linear(C, A)
    if A.kind != "inert":
        std = al.classify(*((1, 0) if A.kind == "split" else (0, 0)), p)
        assert al.is_A_linear(al.transform_pairs(C, A.standardizer), std)


@given(st.sampled_from([(2, 1, 1), (3, 0, 1), (5, 0, 2), (2, 1, 0), (3, 1, 0), (3, 0, 0)]),
       st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_hermitian_orthogonality_matches_symplectic(tdp, seed):
    p, t, d = tdp
    A = al.classify(t, d, p)
    rng = np.random.default_rng(seed)
    n = 3
    gens = [rng.integers(0, p, (n, 2)) for _ in range(2)]
    C = al.to_symplectic(gens, A)
    herm = all(al.hermitian_inner(v.reshape(-1, 2), w.reshape(-1, 2), A) == A.elem(0)
               for v in C.gens for w in C.gens)
    assert herm == sc.is_self_orthogonal(C)


def test_classical_code_basics():
    H = hamming_dual()
    assert H.dim == 3 and H.dual().dim == 4
    assert H.dual().contains_code(H)
    assert al.classical_min_distance(H) == 4
    assert al.classical_min_distance(H.dual()) == 3
    assert al.classical_min_weight_outside(H, H) is None
    with pytest.raises(DomainError):
        ClassicalCode(2, 3, [[1, 0]])


def test_css_hamming_713():
    H = hamming_dual()
    C = al.css_build(H, H)
    params = sc.parameters(C)
    assert (params.n, params.k, params.d) == (7, 1, 3)
    assert al.css_distance(H, H) == 3
    assert al.is_A_linear(C, al.split_algebra(2))
    C1, C2 = al.split_extract(C)
    assert C1 == H and C2 == H
    assert al.mat2_check(C)


def test_css_rejects_non_orthogonal_pair():
    C = ClassicalCode(2, 2, [[1, 0]])
    with pytest.raises(DomainError):
        al.css_build(C, C)


def _random_css_pair(p, n, rng):
    C1 = ClassicalCode(p, n, rng.integers(0, p, (int(rng.integers(0, n)), n)))
    perp = C1.dual()
    k2 = int(rng.integers(0, perp.dim + 1))
    C2 = ClassicalCode(p, n, (rng.integers(0, p, (k2, perp.dim)) @ perp.gens) % p)
    return C1, C2


@given(st.sampled_from([(2, 3), (2, 4), (3, 3), (5, 2)]), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_css_split_roundtrip(pn, seed):
    p, n = pn
    rng = np.random.default_rng(seed)
    C1, C2 = _random_css_pair(p, n, rng)
    C = al.css_build(C1, C2)
    assert sc.is_self_orthogonal(C)
    assert al.split_extract(C) == (C1, C2)
    if C1.dim + C2.dim < n:
        k, d, _ = oracles.quantum_params(_rows(C), p, n)
        assert al.css_distance(C1, C2) == d
    # swapping the idempotents exchanges the roles of C1 and C2
    assert al.split_extract(al.swap_idempotents(C)) == (C2, C1)


@given(st.sampled_from([(3, 0, 2), (5, 3, 2), (5, 1, 0), (2, 1, 0)]), st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_split_extract_nonstandard_algebra(tdp, seed):
    p, t, d = tdp
    A = al.classify(t, d, p)
    assert A.kind == "split"
    rng = np.random.default_rng(seed)
    C = al.random_A_linear(A, 3, 2, rng)
    C1, C2 = al.split_extract(C, A)
    back = al.transform_pairs(_split_rebuild(C1, C2, p), field.inverse(A.standardizer, p))
    assert back == C


def _split_rebuild(C1, C2, p):
    # css_build without the orthogonality precondition: v1 X + v2 (1 - X) -> (v2, v1 - v2)
    rows = [np.stack([np.zeros_like(v), v], axis=1).reshape(-1) for v in C1.gens]
    rows += [np.stack([v, (-v) % p], axis=1).reshape(-1) for v in C2.gens]
    n = C1.n
    return sc.SympCode(p, n, np.array(rows, dtype=np.int64).reshape(len(rows), 2 * n))


@given(st.sampled_from([(2, 4), (3, 3), (3, 4), (5, 3)]), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_ramified_roundtrip_and_bounds(pn, seed):
    p, n = pn
    rng = np.random.default_rng(seed)
    data = al.random_ramified_data(p, n, rng)
    C = al.ramified_build(data)
    assert sc.is_self_orthogonal(C)
    assert al.is_A_linear(C, al.ramified_algebra(p))
    assert al.ramified_extract(C) == data
    if C.dim < n:
        lo, hi = al.ramified_distance_bounds(data)
        _, d, _ = oracles.quantum_params(_rows(C), p, n)
        bounds = [b for b in (lo, hi) if b is not None]
        assert min(bounds) <= d <= max(bounds)
        if hi is not None:
            assert d <= hi


def test_ramified_rejects_asymmetric_phi():
    p = 3
    C1 = ClassicalCode(p, 4, [[1, 1, 1, 0], [0, 0, 0, 0]][:1])
    C0 = C1
    ok = al.RamifiedData(C1, C0, [[1, 0, 0, 0]])
    assert sc.is_self_orthogonal(al.ramified_build(ok))
    C1b = ClassicalCode(p, 6, [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]])
    with pytest.raises(DomainError, match="symmetry"):
        al.RamifiedData(C1b, C1b, [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 0]])


def test_ramified_with_nonstandard_algebra():
    p = 5
    A = al.classify(2, 1, p)  # (x - 1)^2
    assert A.kind == "ramified"
    rng = np.random.default_rng(3)
    data = al.random_ramified_data(p, 4, rng)
    C = al.ramified_build(data, A)
    assert al.is_A_linear(C, A)
    assert al.ramified_extract(C, A) == data


def test_puncture_shortening_example():
    H = hamming_dual()
    C = al.css_build(H, H)
    P = al.puncture_code(C)
    ones = np.ones(7, dtype=np.int64)
    assert P.contains(ones)
    S = al.shorten(C, ones)
    assert S == C
    with pytest.raises(DomainError):
        al.shorten(C, np.zeros(7, dtype=np.int64))


def test_puncture_rejects_foreign_word():
    C = sc.SympCode(2, 2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    P = al.puncture_code(C)
    bad = next(v for v in itertools.product(range(2), repeat=2) if not P.contains(v))
    with pytest.raises(DomainError, match="puncture code"):
        al.shorten(C, bad)


def _words(C):
    return oracles.span(_rows(C), C.p, C.n)


@given(st.sampled_from([(2, 4), (3, 3), (5, 3)]), st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_puncture_words_give_self_orthogonal_codes(pn, seed):
    p, n = pn
    rng = np.random.default_rng(seed)
    C = sc.random_self_orthogonal(p, n, int(rng.integers(1, n + 1)), rng)
    P = al.puncture_code(C)
    base = al.shortened_dual_distance(C)
    for c in _words(P):
        if not any(c):
            continue
        S = al.shorten(C, c)
        assert sc.is_self_orthogonal(S)
        assert S.n == sum(1 for x in c if x)
        assert al.shortened_dual_distance(S) >= base


@given(st.sampled_from([(2, 1, 1), (3, 0, 1), (5, 0, 2), (2, 1, 0), (3, 1, 0), (5, 1, 1)]),
       st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_puncture_norms_equal_puncture_dual(tdp, seed):
    p, t, d = tdp
    A = al.classify(t, d, p)
    rng = np.random.default_rng(seed)
    C = al.random_A_linear(A, int(rng.integers(1, 5)), int(rng.integers(1, 3)), rng)
    assert al.puncture_dual_norms(C, A) == al.puncture_code(C).dual()


def test_puncture_norms_reject_ramified():
    A = al.ramified_algebra(3)
    C = al.to_symplectic([np.array([[1, 0], [0, 1]])], A)
    with pytest.raises(DomainError):
        al.puncture_dual_norms(C, A)


def test_componentwise_norm_definition():
    A = al.classify(1, 1, 2)
    words = np.array([[1, 0, 0, 1, 1, 1, 0, 0]])
    assert al.componentwise_norms(words, A).tolist() == [[1, 1, 1, 0]]


def test_classification_matches_legendre_up_to_101():
    for p in (q for q in range(3, 102) if field.is_prime(q)):
        for t in range(p):
            for d in range(p):
                assert al.classify(t, d, p).kind == al.classify_by_discriminant(t, d, p)


def test_mat2_check_distinguishes_pairs():
    H = hamming_dual()
    assert al.mat2_check(al.css_build(H, H))
    assert not al.mat2_check(al.css_build(H, ClassicalCode(2, 7, H.gens[:1])))


def test_puncture_code_trivial_cases():
    C = sc.SympCode(3, 3, [[1, 0, 2, 0, 0, 0], [0, 0, 1, 0, 1, 0]])
    assert al.puncture_code(C) == ClassicalCode.full(3, 3)
    assert al.puncture_code(sc.SympCode(2, 1, [[1, 0], [0, 1]])).dim == 0


def test_binary_inert_norms_are_supports():
    A = al.classify(1, 1, 2)
    rng = np.random.default_rng(4)
    C = al.random_A_linear(A, 5, 2, rng)
    words = oracles.span(_rows(C), 2, 10)
    supports = [[int(w[2 * i] or w[2 * i + 1]) for i in range(5)] for w in words]
    assert al.puncture_dual_norms(C, A) == ClassicalCode(2, 5, supports)
