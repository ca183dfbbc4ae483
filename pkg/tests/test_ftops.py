from math import prod

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nbcodes import alinear as al, ftops, numfield
from nbcodes.errors import DomainError, ResourceError
from nbcodes.ftops import FtMatrix

from test_alinear import hamming_dual

INERT2 = al.classify(1, 1, 2)
J_MINUS_I = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
CNOT_T1 = [[1, 1], [0, 1]]
CNOT_T2 = [[1, 0], [1, 1]]


def omega_matrix():
    w, wb = (0, 1), INERT2.conj(INERT2.elem(0, 1))
    return FtMatrix.from_grid(INERT2, [[1, 1, 1], [1, w, wb], [1, wb, w]])


def gu_order(m, q):
    """|GU_m(q)|, the unitary group over GF(q^2)."""
    return q ** (m * (m - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, m + 1))


def gl_order(m, q):
    return prod(q**m - q**i for i in range(m))


def test_j_minus_i_fault_tolerant():
    T = FtMatrix.from_grid(al.classify(1, 1, 2), J_MINUS_I)
    C = numfield.reduce_mod_p(numfield.qr_module(numfield.QuadRing(5)), 2)
    assert ftops.is_ft_unitary(T) and not ftops.is_monomial(T)
    assert ftops.is_symplectic_matrix(ftops.embed_symplectic(T), 2)
    assert ftops.preserves_code_power(T, C)


def test_omega_matrix_inert_unitary():
    T = omega_matrix()
    assert ftops.is_ft_unitary(T) and not ftops.is_monomial(T)
    C = numfield.reduce_mod_p(numfield.qr_module(numfield.QuadRing(5)), 2)
    assert ftops.preserves_code_power(T, C)


def test_cnot_split_pair():
    assert ftops.split_pair_check(CNOT_T1, CNOT_T2, 2)
    A = al.split_algebra(2)
    T = ftops.assemble_split_pair(CNOT_T1, CNOT_T2, A)
    assert ftops.is_ft_unitary(T) and not ftops.is_monomial(T)
    H = hamming_dual()
    assert ftops.preserves_code_power(T, al.css_build(H, H))


def test_split_pair_rejects_singular():
    with pytest.raises(DomainError):
        ftops.split_pair_check([[1, 1], [1, 1]], CNOT_T2, 2)
    assert not ftops.split_pair_check(CNOT_T1, CNOT_T1, 2)


def test_two_identity_not_unitary():
    T = FtMatrix.from_grid(al.classify(1, 1, 5), [[2, 0], [0, 2]])
    assert not ftops.is_ft_unitary(T)
    assert not ftops.is_symplectic_matrix(ftops.embed_symplectic(T), 5)


def test_scalar_census_binary():
    A = al.split_algebra(2)
    # orthogonal matrices over GF(2) are permutations for m <= 3; O_4 adds the J - I coset
    got = [(c.total, c.unitary, c.nonmonomial)
           for c in (ftops.enumerate_ft_group(A, m, scalar=True) for m in (1, 2, 3, 4))]
    assert got == [(2, 1, 0), (16, 2, 0), (512, 6, 0), (65536, 48, 24)]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_inert_census_matches_unitary_group_order(m):
    c = ftops.enumerate_ft_group(INERT2, m)
    assert c.unitary == gu_order(m, 2)
    assert (c.nonmonomial > 0) == (m >= 3)
    for T in c.samples:
        assert ftops.is_ft_unitary(T) and not ftops.is_monomial(T)


@pytest.mark.parametrize("m", [1, 2])
def test_split_census_matches_general_linear_order(m):
    c = ftops.enumerate_ft_group(al.split_algebra(2), m)
    assert c.unitary == gl_order(m, 2)
    assert (c.nonmonomial > 0) == (m >= 2)


def test_census_limit():
    with pytest.raises(ResourceError):
        ftops.enumerate_ft_group(INERT2, 4, limit=1000)


algs = st.sampled_from([(2, 1, 1), (2, 1, 0), (3, 0, 1), (3, 0, 0), (5, 0, 2), (5, 1, 0)])


@given(algs, st.integers(1, 3), st.integers(0, 10**6))
@settings(max_examples=80, deadline=None)
def test_unitary_iff_symplectic_embedding(tdp, m, seed):
    A = al.classify(*tdp[1:], tdp[0])
    rng = np.random.default_rng(seed)
    T = FtMatrix(A, rng.integers(0, A.p, (m, m, 2)))
    assert ftops.is_ft_unitary(T) == ftops.is_symplectic_matrix(ftops.embed_symplectic(T), A.p)


@given(algs, st.integers(1, 2), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_any_matrix_preserves_A_linear_power(tdp, m, seed):
    A = al.classify(*tdp[1:], tdp[0])
    rng = np.random.default_rng(seed)
    C = al.random_A_linear(A, 2, 1, rng)
    T = FtMatrix(A, rng.integers(0, A.p, (m, m, 2)))
    assert ftops.preserves_code_power(T, C)


@given(algs, st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_dagger_is_antihomomorphism(tdp, seed):
    A = al.classify(*tdp[1:], tdp[0])
    rng = np.random.default_rng(seed)
    S = FtMatrix(A, rng.integers(0, A.p, (2, 2, 2)))
    T = FtMatrix(A, rng.integers(0, A.p, (2, 2, 2)))
    assert ftops.dagger(S @ T) == ftops.dagger(T) @ ftops.dagger(S)
    assert ftops.dagger(ftops.dagger(S)) == S


def test_product_of_unitaries_is_unitary():
    T = omega_matrix()
    assert ftops.is_ft_unitary(T @ T)
    assert T @ FtMatrix.identity(INERT2, 3) == T


def test_preserve_preconditions():
    C = numfield.reduce_mod_p(numfield.qr_module(numfield.QuadRing(5)), 3)
    with pytest.raises(DomainError):
        ftops.preserves_code_power(omega_matrix(), C)
    from nbcodes.sympcode import SympCode
    Z = SympCode(2, 3, [[1, 0, 1, 0, 1, 0]])
    with pytest.raises(DomainError, match="not linear"):
        ftops.preserves_code_power(omega_matrix(), Z)


def test_code_power_shape():
    H = hamming_dual()
    C = al.css_build(H, H)
    P = ftops.code_power(C, 3)
    assert (P.n, P.dim) == (21, 18)


def test_repr_and_grid():
    T = FtMatrix.from_grid(INERT2, [[(1, 1)]])
    assert repr(T) == "FtMatrix(p=2, t=1, d=1, [1:1])"
    with pytest.raises(DomainError):
        FtMatrix(INERT2, np.zeros((2, 3, 2)))
