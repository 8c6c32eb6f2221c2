"""Exact arithmetic in GF(p^r).

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_0 + c_1 Y + ...``
is the polynomial-basis representative modulo the field modulus.  Scalar
arithmetic goes through Python lists; the ``v*`` methods of :class:`FieldSpec`
are the numpy-vectorized counterparts used by the linear algebra.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping, Sequence

import numpy as np

from .errors import DivisionByZero, IndexOutOfRange, NonPrimeP, NotPrimePower, SizeExceeded

MAX_FIELD_ORDER = 1 << 16

# full q*q addition table is built below this order (odd characteristic only)
_ADD_TABLE_LIMIT = 1024

ORDERINGS = ("power", "natural")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, r)`` with ``q == p**r``; raise NotPrimePower otherwise."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    r, rest = 0, q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, r


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem (0 when k > n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * math.comb(ni, ki) % p
        n //= p
        k //= p
    return result


# -- polynomials over F_p as ascending digit lists, used only during construction


def _poly_divmod_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    # ordered by integer encoding
    for low in range(p**degree):
        digits = [(low // p**i) % p for i in range(degree)]
        yield digits + [1]


def _is_irreducible(poly: list[int], p: int) -> bool:
    r = len(poly) - 1
    for deg in range(1, r // 2 + 1):
        for div in _monic_polys(p, deg):
            if not _poly_divmod_rem(poly, div, p):
                return False
    return True


def _smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    for cand in _monic_polys(p, r):
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^r) with a fixed modulus, primitive element and point order.

    ``ordering`` selects the point enumeration ``beta``: ``"power"`` gives
    ``beta_0 = 0, beta_k = alpha^(k-1)``; ``"natural"`` (prime fields only)
    gives ``beta_k = k``.
    """

    def __init__(self, p: int, r: int, modulus: Sequence[int], ordering: str = "power"):
        if ordering not in ORDERINGS:
            raise ValueError(f"unknown ordering {ordering!r}")
        if ordering == "natural" and r != 1:
            raise ValueError("natural ordering is only defined for prime fields")
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = tuple(modulus)
        self.ordering = ordering
        q = self.q

        self._pows = [p**i for i in range(r)]
        self._neg = [self._encode([(-c) % p for c in self._digits(x)]) for x in range(q)]
        if p == 2:
            self._add_rows = None
        elif q <= _ADD_TABLE_LIMIT:
            self._add_rows = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_rows = None

        alpha, exp = self._find_primitive()
        self._exp = exp + exp  # length 2(q-1), avoids a modulo in mul
        self._log = [-1] * q
        for k, e in enumerate(exp):
            self._log[e] = k
        self.alpha = FieldElement(self, alpha)
        self.log_table: Mapping[int, int] = MappingProxyType(
            {e: k for k, e in enumerate(exp)}
        )

        if ordering == "power":
            self.points = (0,) + tuple(exp)
        else:
            self.points = tuple(range(p))
        self._point_index = [0] * q
        for k, e in enumerate(self.points):
            self._point_index[e] = k

        self._build_numpy_tables()

    # -- construction helpers

    def _digits(self, x: int) -> list[int]:
        return [(x // w) % self.p for w in self._pows]

    def _encode(self, digits: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(digits, self._pows))

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        return sum(((a // w + b // w) % p) * w for w in self._pows)

    def _poly_mul(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_divmod_rem(prod, list(self.modulus), p)
        return self._encode(rem + [0] * (r - len(rem)))

    def _find_primitive(self) -> tuple[int, list[int]]:
        q = self.q
        for g in range(1, q):
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._poly_mul(x, g)
            if len(powers) == q - 1:
                return g, powers
        raise AssertionError("field has no primitive element")  # pragma: no cover

    def _build_numpy_tables(self) -> None:
        q = self.q
        n = q - 1
        self._np_log = np.array([2 * n if v < 0 else v for v in self._log], dtype=np.int64)
        self._np_exp = np.zeros(4 * n + 1, dtype=np.int64)
        self._np_exp[: 2 * n] = self._exp
        self._np_neg = np.array(self._neg, dtype=np.int64)
        inv = [0] * q
        for x in range(1, q):
            inv[x] = self._exp[(n - self._log[x]) % n]
        self._inv = inv
        self._np_inv = np.array(inv, dtype=np.int64)
        self._np_add = None if self._add_rows is None else np.array(self._add_rows, dtype=np.int64)
        self._np_pows = np.array(self._pows, dtype=np.int64)

    # -- identity

    def _key(self):
        return (self.p, self.r, self.modulus, self.ordering)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, r={self.r}, modulus={list(self.modulus)}, ordering={self.ordering!r})"

    def __call__(self, value: int) -> "FieldElement":
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of GF({self.q})")
        return FieldElement(self, int(value))

    @property
    def is_prime_field(self) -> bool:
        return self.r == 1

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    def embed(self, n: int) -> int:
        """Encoding of the integer ``n`` mapped into the prime subfield."""
        return n % self.p

    def describe(self) -> dict:
        d = {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "modulus": list(self.modulus),
            "alpha": self.alpha.value,
        }
        if self.ordering != "power":
            d["ordering"] = self.ordering
        return d

    # -- scalar arithmetic on encodings

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_rows is not None:
            return self._add_rows[a][b]
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # -- point enumeration

    def beta(self, k: int) -> int:
        if not 0 <= k < self.q:
            raise IndexOutOfRange(f"beta index {k} outside [0, {self.q - 1}]")
        return self.points[k]

    def beta_index(self, e: int) -> int:
        if not 0 <= e < self.q:
            raise IndexOutOfRange(f"{e} is not an element of GF({self.q})")
        return self._point_index[e]

    # -- vectorized arithmetic on integer arrays

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self._np_add is not None:
            return self._np_add[a, b]
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._pows:
            out += ((a // w + b // w) % p) * w
        return out

    def vneg(self, a):
        return self._np_neg[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self._np_exp[self._np_log[a] + self._np_log[b]]

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("zero has no inverse")
        return self._np_inv[a]

    def vsum(self, a, axis=0):
        """Field sum of an integer array along ``axis``."""
        a = np.moveaxis(np.asarray(a, dtype=np.int64), axis, 0)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=0) if a.shape[0] else np.zeros(a.shape[1:], np.int64)
        if self.r == 1:
            return a.sum(axis=0) % self.p
        out = np.zeros(a.shape[1:], dtype=np.int64)
        for w in self._pows:
            out += ((a // w) % self.p).sum(axis=0) % self.p * w
        return out


@dataclass(frozen=True, eq=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def rep(self) -> tuple[int, ...]:
        """Polynomial-basis coefficient vector, ascending degree, length r."""
        return tuple(self.field._digits(self.value))

    def _check(self, other) -> int:
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("operands belong to different fields")
        return other.value

    def __add__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    def __sub__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __mul__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    def __truediv__(self, other):
        b = self._check(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, int(n)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.field.q})({self.value})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, r: int = 1, ordering: str = "power", max_order: int = MAX_FIELD_ORDER) -> FieldSpec:
    """Build GF(p^r) deterministically.

    The modulus is the monic irreducible of degree r with the smallest
    integer encoding and alpha the smallest-encoded element of order q-1.
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    if p**r > max_order:
        raise SizeExceeded(f"field order {p}^{r} exceeds ceiling {max_order}")
    return FieldSpec(p, r, _smallest_irreducible(p, r), ordering)


def field_of_order(q: int, ordering: str = "power", max_order: int = MAX_FIELD_ORDER) -> FieldSpec:
    p, r = factor_prime_power(q)
    return make_field(p, r, ordering, max_order)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
    "neg": lambda a, b: -a,
    "inv": lambda a, b: a.inverse(),
    "pow": lambda a, b: a ** b,
}


def ff_arith(spec: FieldSpec, op: str, a: FieldElement, b: FieldElement | int | None = None) -> FieldElement:
    if a.field != spec or (isinstance(b, FieldElement) and b.field != spec):
        raise ValueError("operand does not belong to the given field")
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


def beta(spec: FieldSpec, k: int) -> FieldElement:
    return FieldElement(spec, spec.beta(k))


def beta_index(spec: FieldSpec, e: FieldElement) -> int:
    return spec.beta_index(e.value)


def all_tuples(q: int, m: int) -> Iterator[tuple[int, ...]]:
    """All tuples in [0, q-1]^m in big-endian mixed-radix order."""
    return itertools.product(range(q), repeat=m)
