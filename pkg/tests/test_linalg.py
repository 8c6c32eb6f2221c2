import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grmrad.errors import FieldMismatch, LengthMismatch, ShapeMismatch
from grmrad.gf import field_of_order
from grmrad.linalg import (
    MatrixGF,
    canonical_basis,
    fingerprint,
    in_rowspace,
    pivot_columns,
    rank,
    rowspace_leq,
    rref,
    same_rowspace,
)

import oracles


def _random_matrix(F, rows, cols, rng):
    return MatrixGF(F, [[rng.randrange(F.q) for _ in range(cols)] for _ in range(rows)], cols=cols)


def _row_mix(F, M, rng):
    """Invertible row operations: scale, swap, add a multiple."""
    A = [list(r) for r in M.tolist()]
    n = len(A)
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        c = rng.randrange(1, F.q)
        if i == j:
            A[i] = [F.mul(c, x) for x in A[i]]
        else:
            A[i] = [F.add(x, F.mul(c, y)) for x, y in zip(A[i], A[j])]
            A[i], A[j] = A[j], A[i]
    return MatrixGF(F, A, cols=M.cols)


def test_identity():
    F = field_of_order(5)
    eye = MatrixGF(F, np.eye(4, dtype=int))
    R, rk = rref(eye)
    assert rk == 4 and R == eye


def test_duplicate_rows():
    F = field_of_order(4)
    M = MatrixGF(F, [[1, 2, 3], [1, 2, 3]])
    R, rk = rref(M)
    assert rk == 1
    assert R.tolist() == [[1, 2, 3], [0, 0, 0]]


def test_zero_and_empty():
    F = field_of_order(3)
    assert rank(MatrixGF(F, np.zeros((3, 4), dtype=int))) == 0
    empty = MatrixGF(F, [], cols=4)
    assert empty.shape == (0, 4)
    assert rowspace_leq(empty, MatrixGF(F, [[1, 0, 0, 0]]))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_rref_shape_invariants_and_idempotence(q):
    F = field_of_order(q)
    rng = random.Random(q)
    for _ in range(10):
        M = _random_matrix(F, rng.randint(1, 6), rng.randint(1, 7), rng)
        R, rk = rref(M)
        piv = pivot_columns(R)
        assert len(piv) == rk and piv == sorted(piv)
        for r, c in enumerate(piv):
            assert R.data[r, c] == 1
            assert np.count_nonzero(R.data[:, c]) == 1
        assert not R.data[rk:].any()
        assert rref(R) == (R, rk)


@settings(max_examples=60)
@given(st.sampled_from([2, 3]), st.data())
def test_rank_and_membership_match_span_enumeration(p, data):
    F = field_of_order(p)
    n = data.draw(st.integers(1, 5))
    k = data.draw(st.integers(1, 4))
    row = st.lists(st.integers(0, p - 1), min_size=n, max_size=n)
    rows = data.draw(st.lists(row, min_size=k, max_size=k))
    M = MatrixGF(F, rows)
    span = oracles.span_enumeration(rows, p)
    assert rank(M) == oracles.rank_by_enumeration(rows, p)
    v = data.draw(row)
    assert in_rowspace(M, v) == (tuple(v) in span)


@pytest.mark.parametrize("q", [3, 4, 7, 8])
def test_row_operations_preserve_canonical_basis(q):
    F = field_of_order(q)
    rng = random.Random(100 + q)
    for _ in range(8):
        M = _random_matrix(F, 4, 6, rng)
        N = _row_mix(F, M, rng)
        assert same_rowspace(M, N)
        assert canonical_basis(M) == canonical_basis(N)
        assert fingerprint(M) == fingerprint(N)
        assert rowspace_leq(M, N) and rowspace_leq(N, M)


def test_rowspace_leq_strict():
    F = field_of_order(3)
    A = MatrixGF(F, [[1, 1, 0]])
    B = MatrixGF(F, [[1, 0, 0], [0, 1, 0]])
    assert rowspace_leq(A, B)
    assert not rowspace_leq(B, A)
    assert not same_rowspace(A, B)
    assert fingerprint(A) != fingerprint(B)


def test_fingerprint_is_hex_digest():
    F = field_of_order(2)
    fp = fingerprint(MatrixGF(F, [[1, 0], [1, 1]]))
    assert len(fp) == 64 and int(fp, 16) >= 0
    assert fp == fingerprint(MatrixGF(F, [[0, 1], [1, 0]]))


def test_errors():
    F = field_of_order(3)
    A = MatrixGF(F, [[1, 0, 0]])
    with pytest.raises(ShapeMismatch):
        same_rowspace(A, MatrixGF(F, [[1, 0]]))
    with pytest.raises(FieldMismatch):
        same_rowspace(A, MatrixGF(field_of_order(5), [[1, 0, 0]]))
    with pytest.raises(LengthMismatch):
        in_rowspace(A, [1, 0])
    with pytest.raises(ShapeMismatch):
        MatrixGF(F, [[[0]]])
    with pytest.raises(ValueError):
        MatrixGF(F, [[3]])
