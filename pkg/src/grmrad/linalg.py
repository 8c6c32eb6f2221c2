"""Dense exact linear algebra over GF(q): RREF, rank, row-space comparison."""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import FieldMismatch, LengthMismatch, ShapeMismatch
from .gf import FieldSpec

# below this order, pivot-row multiples are precomputed for every scalar
_MULTIPLES_LIMIT = 256


class MatrixGF:
    """Dense row-major matrix of integer field encodings."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data, cols: int | None = None):
        arr = np.asarray(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise ShapeMismatch("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside GF({field.q})")
        arr = arr.copy()
        arr.flags.writeable = False
        self.field = field
        self.data = arr

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self):
        return f"MatrixGF(GF({self.field.q}), {self.rows}x{self.cols})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()


def _rref_array(F: FieldSpec, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64)
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r, c:] = F.vmul(F.inv(lead), A[r, c:])
        col = A[:, c].copy()
        col[r] = 0
        targets = np.flatnonzero(col)
        if targets.size:
            # entries left of c in the pivot row are zero, so only the tail changes
            prow = A[r, c:]
            factors = F.vneg(col[targets])
            if F.q <= _MULTIPLES_LIMIT:
                multiples = F.vmul(np.arange(F.q)[:, None], prow[None, :])
                update = multiples[factors]
            else:
                update = F.vmul(factors[:, None], prow[None, :])
            A[targets, c:] = F.vadd(A[targets, c:], update)
        pivots.append(c)
        r += 1
    return A, pivots


def rref(M: MatrixGF) -> tuple[MatrixGF, int]:
    """Canonical reduced row echelon form (zero rows last) and the rank."""
    R, pivots = _rref_array(M.field, M.data)
    return MatrixGF(M.field, R), len(pivots)


def rank(M: MatrixGF) -> int:
    return rref(M)[1]


def pivot_columns(R: MatrixGF) -> list[int]:
    """Pivot columns of a matrix already in RREF."""
    cols = []
    for row in R.data:
        nz = np.flatnonzero(row)
        if nz.size == 0:
            break
        cols.append(int(nz[0]))
    return cols


def canonical_basis(M: MatrixGF) -> MatrixGF:
    """RREF with zero rows dropped: one representative per row space."""
    R, rk = rref(M)
    return MatrixGF(M.field, R.data[:rk], cols=M.cols)


def _check_pair(A: MatrixGF, B: MatrixGF) -> None:
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.cols != B.cols:
        raise ShapeMismatch(f"column counts differ: {A.cols} vs {B.cols}")


def reduce_rows(basis: MatrixGF, V) -> np.ndarray:
    """Residuals of the rows of V after elimination against an RREF basis."""
    F = basis.field
    V = np.array(V, dtype=np.int64)
    if V.ndim == 1:
        V = V[None, :]
    if V.shape[1] != basis.cols:
        raise LengthMismatch(f"vector length {V.shape[1]} != {basis.cols}")
    for row, c in zip(basis.data, pivot_columns(basis)):
        coef = V[:, c]
        hit = np.flatnonzero(coef)
        if hit.size:
            V[hit] = F.vsub(V[hit], F.vmul(coef[hit][:, None], row[None, :]))
    return V


def same_rowspace(A: MatrixGF, B: MatrixGF) -> bool:
    _check_pair(A, B)
    return canonical_basis(A) == canonical_basis(B)


def rowspace_leq(A: MatrixGF, B: MatrixGF) -> bool:
    """True iff rowspace(A) is contained in rowspace(B)."""
    _check_pair(A, B)
    if A.rows == 0:
        return True
    return not reduce_rows(canonical_basis(B), A.data).any()


def in_rowspace(B: MatrixGF, v) -> bool:
    v = np.asarray(v, dtype=np.int64)
    if v.ndim != 1 or v.shape[0] != B.cols:
        raise LengthMismatch(f"vector of length {v.shape[-1]} vs {B.cols} columns")
    return not reduce_rows(canonical_basis(B), v).any()


def fingerprint(M: MatrixGF) -> str:
    """SHA-256 of the canonical basis, stable across runs."""
    C = canonical_basis(M)
    F = M.field
    h = hashlib.sha256()
    h.update(f"GF({F.p}^{F.r});{list(F.modulus)};{C.rows}x{C.cols};".encode())
    h.update(C.data.astype("<u4").tobytes())
    return h.hexdigest()
