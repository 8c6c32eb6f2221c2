"""Univariate polynomials over GF(q) and reduced multivariate polynomials.

Coefficients are stored as integer field encodings (see :mod:`grmrad.gf`).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, FieldMismatch, TooManyVariables
from .gf import FieldElement, FieldSpec

NEG_INF = float("-inf")

# ceiling on q^m for anything dense over the ambient space F_q^{q^m}
MAX_AMBIENT_LENGTH = 1 << 16


def _as_int(field: FieldSpec, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldMismatch("coefficient from another field")
        return c.value
    c = int(c)
    if not 0 <= c < field.q:
        raise ValueError(f"{c} is not an element encoding of GF({field.q})")
    return c


class UniPoly:
    """Polynomial in one variable Y, coefficients ascending by degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        cs = [_as_int(field, c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "UniPoly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldSpec, e: int, c=1) -> "UniPoly":
        return cls(field, [0] * e + [c])

    @classmethod
    def linear(cls, field: FieldSpec, root) -> "UniPoly":
        """``Y - root``."""
        return cls(field, [field.neg(_as_int(field, root)), 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def _check(self, other: "UniPoly") -> None:
        if not isinstance(other, UniPoly):
            raise TypeError("expected a UniPoly")
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.to_text()})"

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def scale(self, c) -> "UniPoly":
        F = self.field
        c = _as_int(F, c)
        return UniPoly(F, [F.mul(c, a) for a in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return UniPoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UniPoly(F, out)

    def pow(self, n: int, reduce_functional: bool = False) -> "UniPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = UniPoly.constant(self.field, 1)
        base = self.reduce_functional() if reduce_functional else self
        while n:
            if n & 1:
                result = result * base
                if reduce_functional:
                    result = result.reduce_functional()
            n >>= 1
            if n:
                base = base * base
                if reduce_functional:
                    base = base.reduce_functional()
        return result

    def reduce_functional(self) -> "UniPoly":
        """Replace Y^q by Y until the degree is at most q-1 (same function on F_q)."""
        F = self.field
        q = F.q
        if len(self.coeffs) <= q:
            return self
        out = [0] * q
        for e, c in enumerate(self.coeffs):
            if c:
                t = e if e < q else (e - 1) % (q - 1) + 1
                out[t] = F.add(out[t], c)
        return UniPoly(F, out)

    def __call__(self, y) -> FieldElement:
        F = self.field
        y = _as_int(F, y)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, y), c)
        return FieldElement(F, acc)

    def value_table(self) -> tuple[int, ...]:
        """Values at beta_0, ..., beta_{q-1}."""
        return tuple(self(b).value for b in self.field.points)

    def to_text(self, var: str = "Y") -> str:
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = var if e == 1 else f"{var}^{e}"
                parts.append(mono if c == 1 else f"{c} * {mono}")
        return " + ".join(parts) if parts else "0"


def uni_arith(op: str, a: UniPoly, b=None, *, reduce_functional: bool = False) -> UniPoly:
    """Dispatch ``add``, ``scale``, ``mul`` or ``pow`` on univariate polynomials."""
    if op == "add":
        out = a + b
    elif op == "scale":
        out = a.scale(b)
    elif op == "mul":
        out = a * b
    elif op == "pow":
        return a.pow(int(b), reduce_functional=reduce_functional)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return out.reduce_functional() if reduce_functional else out


def uni_eval(f: UniPoly, y: FieldElement) -> FieldElement:
    return f(y)


class ReducedPoly:
    """Polynomial in Y_1..Y_m with every exponent in [0, q-1].

    ``terms`` maps exponent tuples to nonzero coefficient encodings.
    """

    __slots__ = ("field", "m", "terms")

    def __init__(self, field: FieldSpec, m: int, terms: Mapping[tuple[int, ...], object] = ()):
        q = field.q
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != m:
                raise ArityMismatch(f"monomial {mono} has arity {len(mono)}, expected {m}")
            if any(not 0 <= e < q for e in mono):
                raise ValueError(f"monomial {mono} is not reduced for q={q}")
            c = _as_int(field, c)
            if c:
                clean[mono] = field.add(clean.get(mono, 0), c)
        self.field = field
        self.m = m
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def constant(cls, field: FieldSpec, m: int, c=1) -> "ReducedPoly":
        return cls(field, m, {(0,) * m: c})

    @classmethod
    def monomial(cls, field: FieldSpec, exps: Sequence[int], c=1) -> "ReducedPoly":
        return cls(field, len(exps), {tuple(exps): c})

    def __eq__(self, other):
        return (
            isinstance(other, ReducedPoly)
            and self.field == other.field
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.m, frozenset(self.terms.items())))

    def __repr__(self):
        return f"ReducedPoly({self.to_text()})"

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ReducedPoly") -> "ReducedPoly":
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")
        if other.m != self.m:
            raise ArityMismatch("polynomials with different arity")
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = self.field.add(merged.get(mono, 0), c)
        return ReducedPoly(self.field, self.m, merged)

    def scale(self, c) -> "ReducedPoly":
        F = self.field
        c = _as_int(F, c)
        return ReducedPoly(F, self.m, {k: F.mul(c, v) for k, v in self.terms.items()})

    @property
    def total_degree(self):
        return max((sum(k) for k in self.terms), default=NEG_INF)

    def __call__(self, point: Sequence) -> FieldElement:
        F = self.field
        if len(point) != self.m:
            raise ArityMismatch(f"point of arity {len(point)} for a polynomial in {self.m} variables")
        ys = [_as_int(F, y) for y in point]
        return FieldElement(F, _horner(F, self.terms, ys))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        # big-endian mixed radix == lexicographic order on exponent tuples
        return sorted(self.terms.items())

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            vars_ = " ".join(
                f"Y{l + 1}" if e == 1 else f"Y{l + 1}^{e}" for l, e in enumerate(mono) if e
            )
            if not vars_:
                parts.append(str(c))
            else:
                parts.append(f"{c} * {vars_}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "q": self.field.q,
            "terms": [{"exponents": list(k), "coeff": v} for k, v in self.sorted_terms()],
        }


def _horner(F: FieldSpec, terms: Mapping[tuple[int, ...], int], ys: Sequence[int]) -> int:
    # nested Horner in the last variable
    if not ys:
        return terms.get((), 0)
    groups: dict[int, dict] = {}
    for mono, c in terms.items():
        groups.setdefault(mono[-1], {})[mono[:-1]] = c
    if not groups:
        return 0
    y = ys[-1]
    acc = 0
    for e in range(max(groups), -1, -1):
        acc = F.mul(acc, y)
        if e in groups:
            acc = F.add(acc, _horner(F, groups[e], ys[:-1]))
    return acc


def multi_eval(P: ReducedPoly, point: Sequence) -> FieldElement:
    return P(point)


def total_degree(P: ReducedPoly):
    return P.total_degree


def tensor_product(factors: Sequence[UniPoly], max_length: int = MAX_AMBIENT_LENGTH) -> ReducedPoly:
    """Product of ``factors[l](Y_{l+1})`` as an m-variate reduced polynomial."""
    if not factors:
        raise ValueError("need at least one factor")
    F = factors[0].field
    m = len(factors)
    if F.q**m > max_length:
        raise TooManyVariables(f"q^m = {F.q}^{m} exceeds ceiling {max_length}")
    supports = []
    for f in factors:
        if f.field != F:
            raise FieldMismatch("factors over different fields")
        if f.degree > F.q - 1:
            raise ValueError("factor degree exceeds q-1")
        supports.append([(e, c) for e, c in enumerate(f.coeffs) if c])
    terms = {}
    for combo in itertools.product(*supports):
        c = 1
        for _, a in combo:
            c = F.mul(c, a)
        terms[tuple(e for e, _ in combo)] = c
    return ReducedPoly(F, m, terms)
