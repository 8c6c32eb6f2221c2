"""The modular algebra A = F_q[X_1..X_m] / (X_l^q - 1) and its radical powers.

An element of A is stored as its coefficient vector in F_q^(q^m), with the
monomial x^i placed at ``monomial_rank(i)`` (big-endian mixed radix).  The
same order indexes evaluation points, so vectors from :mod:`grmrad.codes`
and from here are directly comparable.
"""

from __future__ import annotations

import functools
import itertools
from typing import Sequence

import numpy as np

from .errors import ArityMismatch, FieldMismatch, IndexOutOfRange, SizeExceeded
from .gf import FieldSpec
from .interp import indicator_poly, signed_binom
from .linalg import MatrixGF
from .poly import MAX_AMBIENT_LENGTH, ReducedPoly


def monomial_rank(i: Sequence[int], q: int) -> int:
    r = 0
    for e in i:
        if not 0 <= e < q:
            raise IndexOutOfRange(f"exponent {e} outside [0, {q - 1}]")
        r = r * q + e
    return r


def monomial_unrank(rank: int, q: int, m: int) -> tuple[int, ...]:
    if not 0 <= rank < q**m:
        raise IndexOutOfRange(f"rank {rank} outside [0, {q**m - 1}]")
    out = []
    for _ in range(m):
        rank, e = divmod(rank, q)
        out.append(e)
    return tuple(reversed(out))


def multi_indices(q: int, m: int) -> list[tuple[int, ...]]:
    """All of [0, q-1]^m in rank order."""
    return list(itertools.product(range(q), repeat=m))


def theta(i: Sequence[int], q: int) -> tuple[int, ...]:
    """The involution i -> (q-1-i_1, ..., q-1-i_m)."""
    return tuple(q - 1 - e for e in i)


def _check_size(q: int, m: int, max_length: int = MAX_AMBIENT_LENGTH) -> None:
    if q**m > max_length:
        raise SizeExceeded(f"q^m = {q}^{m} exceeds ceiling {max_length}")


class AlgebraElement:
    """Element of A as a length q^m coefficient vector (read-only)."""

    __slots__ = ("field", "m", "coeffs")

    def __init__(self, field: FieldSpec, m: int, coeffs):
        arr = np.array(coeffs, dtype=np.int64).reshape(-1)
        if arr.shape[0] != field.q**m:
            raise ValueError(f"expected {field.q**m} coefficients, got {arr.shape[0]}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"coefficients outside GF({field.q})")
        arr.flags.writeable = False
        self.field = field
        self.m = m
        self.coeffs = arr

    @classmethod
    def zero(cls, field: FieldSpec, m: int) -> "AlgebraElement":
        return cls(field, m, np.zeros(field.q**m, dtype=np.int64))

    @classmethod
    def one(cls, field: FieldSpec, m: int) -> "AlgebraElement":
        return cls.monomial(field, (0,) * m)

    @classmethod
    def monomial(cls, field: FieldSpec, i: Sequence[int], c: int = 1) -> "AlgebraElement":
        m = len(i)
        v = np.zeros(field.q**m, dtype=np.int64)
        v[monomial_rank(i, field.q)] = c
        return cls(field, m, v)

    def _check(self, other: "AlgebraElement") -> None:
        if other.field != self.field:
            raise FieldMismatch("elements over different fields")
        if other.m != self.m:
            raise ArityMismatch("elements with different numbers of variables")

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.field == other.field
            and self.m == other.m
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.field, self.m, self.coeffs.tobytes()))

    def __repr__(self):
        return f"AlgebraElement(q={self.field.q}, m={self.m}, {self.coeffs.tolist()})"

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.field, self.m, self.field.vadd(self.coeffs, other.coeffs))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(self.field, self.m, self.field.vsub(self.coeffs, other.coeffs))

    def scale(self, c: int) -> "AlgebraElement":
        return AlgebraElement(self.field, self.m, self.field.vmul(c, self.coeffs))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return alg_mul(self, other)

    def tolist(self) -> list[int]:
        return self.coeffs.tolist()

    def to_csv_row(self) -> str:
        return ",".join(str(v) for v in self.coeffs.tolist())


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Product in A: exponents add componentwise modulo q."""
    a._check(b)
    F, m, q = a.field, a.m, a.field.q
    shape = (q,) * m
    B = b.coeffs.reshape(shape)
    out = np.zeros(shape, dtype=np.int64)
    for r in np.flatnonzero(a.coeffs):
        shift = monomial_unrank(int(r), q, m)
        rolled = np.roll(B, shift, axis=tuple(range(m)))
        out = F.vadd(out, F.vmul(int(a.coeffs[r]), rolled))
    return AlgebraElement(F, m, out.reshape(-1))


@functools.lru_cache(maxsize=64)
def _binomial_table(F: FieldSpec) -> np.ndarray:
    # row i = coefficient vector of (x - 1)^i in one variable
    q = F.q
    return np.array([[signed_binom(F, i, j) for j in range(q)] for i in range(q)], dtype=np.int64)


def _tensor_rows(F: FieldSpec, table: np.ndarray, indices: Sequence[Sequence[int]]) -> np.ndarray:
    """Rows prod_l table[i_l] (Kronecker order) for each multi-index i."""
    idx = np.asarray(indices, dtype=np.int64)
    n, m = idx.shape
    out = np.ones((n, 1), dtype=np.int64)
    for l in range(m):
        factor = table[idx[:, l]]
        out = F.vmul(out[:, :, None], factor[:, None, :]).reshape(n, -1)
    return out


def b_poly(F: FieldSpec, i: Sequence[int]) -> AlgebraElement:
    """(x_1 - 1)^{i_1} ... (x_m - 1)^{i_m} as a coefficient vector."""
    m = len(i)
    _check_size(F.q, m)
    for e in i:
        if not 0 <= e < F.q:
            raise IndexOutOfRange(f"exponent {e} outside [0, {F.q - 1}]")
    return AlgebraElement(F, m, _tensor_rows(F, _binomial_table(F), [tuple(i)])[0])


def radical_indices(q: int, m: int, d: int) -> list[tuple[int, ...]]:
    """Multi-indices i with |i| >= d, in rank order."""
    if not 0 <= d <= m * (q - 1) + 1:
        raise IndexOutOfRange(f"radical power {d} outside [0, {m * (q - 1) + 1}]")
    return [i for i in multi_indices(q, m) if sum(i) >= d]


def radical_basis(F: FieldSpec, m: int, d: int) -> list[AlgebraElement]:
    """The basis {B_i : |i| >= d} of M^d."""
    return [AlgebraElement(F, m, row) for row in radical_matrix(F, m, d).data]


def radical_matrix(F: FieldSpec, m: int, d: int) -> MatrixGF:
    """The radical basis of M^d stacked as matrix rows."""
    _check_size(F.q, m)
    idx = radical_indices(F.q, m, d)
    if not idx:
        return MatrixGF(F, np.zeros((0, F.q**m), dtype=np.int64))
    return MatrixGF(F, _tensor_rows(F, _binomial_table(F), idx))


@functools.lru_cache(maxsize=256)
def weight_counts(q: int, m: int) -> tuple[int, ...]:
    """counts[s] = #{i in [0,q-1]^m : |i| = s}, by dynamic programming."""
    counts = [1]
    for _ in range(m):
        nxt = [0] * (len(counts) + q - 1)
        for s, c in enumerate(counts):
            for e in range(q):
                nxt[s + e] += c
        counts = nxt
    return tuple(counts)


def radical_dim(q: int, m: int, d: int) -> int:
    """dim M^d = #{i : |i| >= d}."""
    if not 0 <= d <= m * (q - 1) + 1:
        raise IndexOutOfRange(f"radical power {d} outside [0, {m * (q - 1) + 1}]")
    return sum(weight_counts(q, m)[d:])


def code_dim_count(q: int, m: int, nu: int) -> int:
    """#{i : |i| <= nu}, the number of reduced monomials of degree <= nu."""
    if not 0 <= nu <= m * (q - 1):
        raise IndexOutOfRange(f"order {nu} outside [0, {m * (q - 1)}]")
    return sum(weight_counts(q, m)[: nu + 1])


def _mode_product(F: FieldSpec, X: np.ndarray, T: np.ndarray, axis: int) -> np.ndarray:
    """Y[.., k, ..] = sum_e X[.., e, ..] * T[k, e] along ``axis``."""
    X = np.moveaxis(X, axis, -1)
    acc = np.zeros(X.shape[:-1] + (T.shape[0],), dtype=np.int64)
    for e in range(X.shape[-1]):
        col = T[:, e]
        if col.any():
            acc = F.vadd(acc, F.vmul(X[..., e : e + 1], col))
    return np.moveaxis(acc, -1, axis)


@functools.lru_cache(maxsize=64)
def _power_table(F: FieldSpec) -> np.ndarray:
    # T[k, e] = beta_k ** e
    q = F.q
    return np.array([[F.pow(F.beta(k), e) for e in range(q)] for k in range(q)], dtype=np.int64)


@functools.lru_cache(maxsize=64)
def _indicator_table(F: FieldSpec) -> np.ndarray:
    # T[e, k] = coefficient of Y^e in F_{beta_k}
    q = F.q
    T = np.zeros((q, q), dtype=np.int64)
    for k in range(q):
        for e, c in enumerate(indicator_poly(F, k).coeffs):
            T[e, k] = c
    return T


def phi(P: ReducedPoly, m: int | None = None) -> AlgebraElement:
    """Evaluation map: coefficient at rank(i) is P(beta_{i_1}, ..., beta_{i_m})."""
    F = P.field
    if m is not None and m != P.m:
        raise ArityMismatch(f"polynomial in {P.m} variables, expected {m}")
    q, m = F.q, P.m
    _check_size(q, m)
    U = np.zeros((q,) * m, dtype=np.int64)
    for mono, c in P.terms.items():
        U[mono] = c
    T = _power_table(F)
    for axis in range(m):
        U = _mode_product(F, U, T, axis)
    return AlgebraElement(F, m, U.reshape(-1))


def phi_inv(a: AlgebraElement) -> ReducedPoly:
    """The reduced polynomial sum_j a_j prod_l F_{beta_{j_l}}(Y_l)."""
    F, m, q = a.field, a.m, a.field.q
    U = a.coeffs.reshape((q,) * m)
    T = _indicator_table(F)
    for axis in range(m):
        U = _mode_product(F, U, T, axis)
    nz = np.argwhere(U)
    return ReducedPoly(F, m, {tuple(int(e) for e in idx): int(U[tuple(idx)]) for idx in nz})


def interpolant_degrees(F: FieldSpec, m: int, vectors) -> np.ndarray:
    """Total degree of phi^{-1}(v) for each row v (-1 for the zero vector)."""
    q = F.q
    V = np.asarray(vectors, dtype=np.int64)
    n = V.shape[0]
    U = V.reshape((n,) + (q,) * m)
    T = _indicator_table(F)
    for axis in range(m):
        U = _mode_product(F, U, T, axis + 1)
    weights = np.zeros((q,) * m, dtype=np.int64)
    for axis in range(m):
        shape = [1] * m
        shape[axis] = q
        weights = weights + np.arange(q).reshape(shape)
    w = weights.reshape(-1)
    flat = U.reshape(n, -1)
    return np.where(flat != 0, w[None, :], -1).max(axis=1)
