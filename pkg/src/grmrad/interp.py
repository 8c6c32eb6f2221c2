"""Indicator and interpolation polynomials F_beta and H_i in their several forms.

``h_poly`` is the definitional construction (a signed binomial combination of
indicators).  The other constructors are independent closed forms that must
agree with it: ``h_closed`` for any q under the power ordering, and the three
prime-field forms of :func:`h_prime_forms` under the natural ordering.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import IndexOutOfRange, NonPrime
from .gf import FieldSpec, binom_mod_p, is_prime, make_field
from .poly import ReducedPoly, UniPoly, tensor_product


def _check_index(F: FieldSpec, i: int) -> None:
    if not 0 <= i < F.q:
        raise IndexOutOfRange(f"index {i} outside [0, {F.q - 1}]")


def signed_binom(F: FieldSpec, i: int, j: int) -> int:
    """Encoding of (-1)^(i-j) * C(i, j) in F (0 when j > i)."""
    c = binom_mod_p(i, j, F.p)
    return F.embed(-c if (i - j) % 2 else c)


@functools.lru_cache(maxsize=4096)
def indicator_poly(F: FieldSpec, k: int) -> UniPoly:
    """1 - (Y - beta_k)^(q-1): equals 1 at beta_k and 0 at every other point."""
    _check_index(F, k)
    one = UniPoly.constant(F, 1)
    return one - UniPoly.linear(F, F.beta(k)).pow(F.q - 1)


@functools.lru_cache(maxsize=4096)
def h_poly(F: FieldSpec, i: int) -> UniPoly:
    """H_i = sum_{k<=i} (-1)^(i-k) C(i,k) F_{beta_k}."""
    _check_index(F, i)
    out = UniPoly(F)
    for k in range(i + 1):
        c = signed_binom(F, i, k)
        if c:
            out = out + indicator_poly(F, k).scale(c)
    return out


def h_closed(F: FieldSpec, i: int) -> UniPoly:
    """Closed form of H_i in terms of the primitive element alpha.

    For i >= 1 the coefficient of Y^(q-1-d) is alpha^(-d) [(-1)^i - (alpha^d - 1)^i],
    d = 1..q-1; H_0 is 1 - Y^(q-1).
    """
    _check_index(F, i)
    q = F.q
    if i == 0:
        return UniPoly.constant(F, 1) - UniPoly.monomial(F, q - 1)
    a = F.alpha.value
    sign = F.embed(-1 if i % 2 else 1)
    coeffs = [0] * q
    for d in range(1, q):
        ad = F.pow(a, d)
        bracket = F.sub(sign, F.pow(F.sub(ad, 1), i))
        coeffs[q - 1 - d] = F.mul(F.pow(a, -d), bracket)
    return UniPoly(F, coeffs)


@dataclass(frozen=True)
class CoeffTable:
    """a[i][d] = sum_j (-1)^(i-j) C(i,j) j^d over F_p, for 0 <= i, d <= p-1."""

    p: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def recurrence_holds(self) -> bool:
        # a[i][d] = i * sum_{k<d} C(d-1, k) a[i-1][k]  for 1 <= i, d <= p-1
        p, a = self.p, self.entries
        return all(
            a[i][d] == i * sum(math.comb(d - 1, k) * a[i - 1][k] for k in range(d)) % p
            for i in range(1, p)
            for d in range(1, p)
        )

    def vanishes_below_diagonal(self) -> bool:
        return all(self.entries[i][d] == 0 for i in range(1, self.p) for d in range(i))

    def diagonal_nonzero(self) -> bool:
        return all(self.entries[i][i] != 0 for i in range(1, self.p))


def a_coeff_table(p: int) -> CoeffTable:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    # Python's pow(0, 0) == 1, which is the convention the table needs
    rows = tuple(
        tuple(
            sum((-1) ** (i - j) * math.comb(i, j) * pow(j, d) for j in range(i + 1)) % p
            for d in range(p)
        )
        for i in range(p)
    )
    return CoeffTable(p, rows)


class PrimeForms(NamedTuple):
    coeff_form: UniPoly
    product_form: UniPoly
    recurrence_form: UniPoly


def prime_field(p: int) -> FieldSpec:
    """F_p with the natural point order beta_k = k."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    return make_field(p, 1, "natural")


def h_prime_forms(p: int, i: int) -> PrimeForms:
    """Three independent constructions of H_i over F_p (natural ordering)."""
    F = prime_field(p)
    _check_index(F, i)
    table = a_coeff_table(p)
    a = table[i]

    coeffs = [0] * p
    coeffs[0] = a[0]
    for d in range(p):
        e = p - 1 - d
        coeffs[e] = (coeffs[e] - a[d]) % p
    coeff_form = UniPoly(F, coeffs)

    lead = (-math.factorial(i)) % p
    product_form = UniPoly.constant(F, lead)
    for j in range(1, p - i):
        product_form = product_form * UniPoly(F, [j % p, 1])

    rec = UniPoly.constant(F, 1)
    for k in range(p - 2, i - 1, -1):
        rec = (UniPoly.linear(F, (k + 1) % p) * rec).scale(pow(k + 1, -1, p))

    return PrimeForms(coeff_form, product_form, rec)


def h_multi(F: FieldSpec, i: Sequence[int]) -> ReducedPoly:
    """H_i(Y_1..Y_m) = prod_l H_{i_l}(Y_l)."""
    return tensor_product([h_poly(F, il) for il in i])
