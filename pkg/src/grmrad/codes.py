"""Generalized Reed-Muller codes C_nu(m, q) as row spaces of evaluation matrices."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .algebra import _check_size, _power_table, _tensor_rows, code_dim_count, interpolant_degrees
from .errors import IndexOutOfRange, LengthMismatch
from .gf import FieldSpec
from .linalg import MatrixGF, in_rowspace, rank, rowspace_leq
from .poly import MAX_AMBIENT_LENGTH


@dataclass(frozen=True)
class CodeSpec:
    field: FieldSpec
    m: int
    nu: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        top = self.m * (self.field.q - 1)
        if not 0 <= self.nu <= top:
            raise IndexOutOfRange(f"order {self.nu} outside [0, {top}]")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def length(self) -> int:
        return self.field.q**self.m


@dataclass(frozen=True)
class GeneratorMatrix:
    """Rows are evaluations of the monomials Y^j with |j| <= nu, in rank order of j."""

    spec: CodeSpec
    monomials: tuple[tuple[int, ...], ...]
    matrix: MatrixGF = dc_field(repr=False)

    @property
    def field(self) -> FieldSpec:
        return self.spec.field

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape

    def header(self) -> dict:
        F = self.field
        return {
            "p": F.p,
            "r": F.r,
            "modulus": list(F.modulus),
            "alpha": F.alpha.value,
            "m": self.spec.m,
            "nu": self.spec.nu,
        }


def grm_generator(spec: CodeSpec, max_length: int = MAX_AMBIENT_LENGTH) -> GeneratorMatrix:
    F, m, q = spec.field, spec.m, spec.q
    _check_size(q, m, max_length)
    monos = [j for j in np.ndindex(*(q,) * m) if sum(j) <= spec.nu]
    # evaluation of Y^j at point (beta_k) is prod_l beta_{k_l}^{j_l}: a Kronecker row
    # of the transposed power table
    rows = _tensor_rows(F, _power_table(F).T.copy(), monos)
    return GeneratorMatrix(spec, tuple(tuple(int(e) for e in j) for j in monos), MatrixGF(F, rows))


def code_contains(G: GeneratorMatrix, v) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if v.shape[0] != G.matrix.cols:
        raise LengthMismatch(f"vector of length {v.shape[0]}, code length {G.matrix.cols}")
    return in_rowspace(G.matrix, v)


def contains_by_degree(spec: CodeSpec, v) -> bool:
    """Membership via the interpolant: v is in C_nu iff deg phi^{-1}(v) <= nu."""
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if v.shape[1] != spec.length:
        raise LengthMismatch(f"vector of length {v.shape[1]}, code length {spec.length}")
    return int(interpolant_degrees(spec.field, spec.m, v)[0]) <= spec.nu


def inclusion_chain(F: FieldSpec, m: int) -> tuple[int, ...]:
    """Dimensions of C_0 < C_1 < ... < C_{m(q-1)}, checking each containment."""
    top = m * (F.q - 1)
    dims = []
    prev = None
    for nu in range(top + 1):
        G = grm_generator(CodeSpec(F, m, nu))
        dim = rank(G.matrix)
        if dim != code_dim_count(F.q, m, nu):
            raise AssertionError(f"rank {dim} of C_{nu} disagrees with monomial count")
        if prev is not None and not rowspace_leq(prev, G.matrix):
            raise AssertionError(f"C_{nu - 1} is not contained in C_{nu}")
        dims.append(dim)
        prev = G.matrix
    return tuple(dims)
