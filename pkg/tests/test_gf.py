import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from grmrad.errors import DivisionByZero, IndexOutOfRange, NonPrimeP, NotPrimePower, SizeExceeded
from grmrad.gf import (
    beta,
    beta_index,
    binom_mod_p,
    factor_prime_power,
    ff_arith,
    field_of_order,
    make_field,
)

import oracles

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9]
PRIME_POWERS_128 = [(p, r) for p in (2, 3, 5, 7, 11, 13) for r in range(1, 8) if p**r <= 128] + [
    (p, 1) for p in range(17, 128) if all(p % d for d in range(2, p))
]


def _smallest_irreducible_cubic_gf2():
    # a cubic is irreducible iff it has no root
    for low in range(8):
        poly = oracles.digits(low, 2, 3) + [1]
        if all(sum(c * x**i for i, c in enumerate(poly)) % 2 for x in (0, 1)):
            return poly


def test_make_field_2_3():
    F = make_field(2, 3)
    assert F.q == 8
    assert list(F.modulus) == _smallest_irreducible_cubic_gf2() == [1, 1, 0, 1]
    assert F.describe() == {"p": 2, "r": 3, "q": 8, "modulus": [1, 1, 0, 1], "alpha": 2}


def test_make_field_prime_degenerate():
    F = make_field(5, 1)
    assert F.q == 5
    assert list(F.modulus) == [0, 1]
    for a, b in itertools.product(range(5), repeat=2):
        assert F.add(a, b) == (a + b) % 5
        assert F.mul(a, b) == (a * b) % 5


def test_make_field_errors():
    with pytest.raises(NonPrimeP):
        make_field(4, 1)
    with pytest.raises(SizeExceeded):
        make_field(2, 17)
    with pytest.raises(NotPrimePower):
        field_of_order(6)


def test_factor_prime_power():
    assert factor_prime_power(27) == (3, 3)
    assert factor_prime_power(7) == (7, 1)
    with pytest.raises(NotPrimePower):
        factor_prime_power(12)


@pytest.mark.parametrize("q", SMALL_ORDERS + [16, 25, 27])
def test_modulus_is_irreducible_and_smallest(q):
    F = field_of_order(q)
    p, r = F.p, F.r
    enc = oracles.undigits(list(F.modulus), p)

    def reducible(poly):
        # product of two monic factors of positive degree
        for d in range(1, r):
            for a in itertools.product(range(p), repeat=d):
                for b in itertools.product(range(p), repeat=r - d):
                    fa, fb = list(a) + [1], list(b) + [1]
                    prod = [0] * (r + 1)
                    for i, x in enumerate(fa):
                        for j, y in enumerate(fb):
                            prod[i + j] = (prod[i + j] + x * y) % p
                    if prod == poly:
                        return True
        return False

    assert not reducible(list(F.modulus))
    for smaller in range(p**r, enc):
        assert reducible(oracles.digits(smaller, p, r + 1))


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    els = range(q)
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a) == oracles.schoolbook_add(F, a, b)
        assert F.mul(a, b) == F.mul(b, a) == oracles.schoolbook_mul(F, a, b)
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", SMALL_ORDERS + [16, 27, 256])
def test_alpha_generates_and_log_table_bijective(q):
    F = field_of_order(q)
    a = F.alpha.value
    walk = {oracles.power_by_squaring(F, a, k) for k in range(q - 1)}
    assert walk == set(range(1, q))
    assert oracles.power_by_squaring(F, a, q - 1) == 1
    assert sorted(F.log_table.values()) == list(range(q - 1))
    assert set(F.log_table) == set(range(1, q))
    # alpha is the smallest-encoded generator
    for g in range(1, a):
        assert len({oracles.power_by_squaring(F, g, k) for k in range(q - 1)}) < q - 1


def test_ff_arith_examples():
    F = make_field(2, 3)
    al = F.alpha
    assert ff_arith(F, "mul", al, ff_arith(F, "inv", al)) == F.one
    assert ff_arith(F, "pow", al, F.q - 1) == F.one
    for x in F.elements():
        assert ff_arith(F, "add", x, ff_arith(F, "neg", x)) == F.zero
    assert ff_arith(F, "pow", al, -1) == al.inverse()
    with pytest.raises(DivisionByZero):
        ff_arith(F, "inv", F.zero)
    with pytest.raises(DivisionByZero):
        ff_arith(F, "div", al, F.zero)


def test_element_rep_and_operators():
    F = make_field(3, 2)
    x = F(5)
    assert x.rep == (2, 1)
    assert (x - x) == F.zero
    assert (x / x) == F.one
    assert x * x.inverse() == F.one
    assert (x**3) == x * x * x


@pytest.mark.parametrize("q", SMALL_ORDERS + [16])
def test_vectorized_ops_match_scalar(q):
    F = field_of_order(q)
    a, b = np.meshgrid(np.arange(q), np.arange(q), indexing="ij")
    add = F.vadd(a, b)
    mul = F.vmul(a, b)
    for x, y in itertools.product(range(q), repeat=2):
        assert add[x, y] == F.add(x, y)
        assert mul[x, y] == F.mul(x, y)
    assert F.vsum(a, axis=0).tolist() == [F.sum(range(q))] * q


def test_vectorized_digitwise_add_large_odd_field():
    F = make_field(3, 7)  # above the add-table limit
    rng = np.random.default_rng(1)
    a, b = rng.integers(0, F.q, 200), rng.integers(0, F.q, 200)
    got = F.vadd(a, b)
    for x, y, z in zip(a, b, got):
        assert z == oracles.schoolbook_add(F, int(x), int(y))


def test_beta():
    F = make_field(2, 3)
    assert beta(F, 0) == F.zero
    assert beta(F, 1) == F.one
    assert beta(F, 2) == F.alpha
    with pytest.raises(IndexOutOfRange):
        beta(F, 8)
    F4 = field_of_order(4)
    pts = [beta(F4, k) for k in range(4)]
    assert set(pts) == set(F4.elements()) and len(set(pts)) == 4
    for k in range(4):
        assert beta_index(F4, pts[k]) == k


def test_natural_ordering():
    F = make_field(5, 1, "natural")
    assert F.points == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        make_field(2, 2, "natural")


def test_binom_examples():
    assert binom_mod_p(9, 0, 3) == 1
    assert binom_mod_p(7, 3, 2) == 1
    assert binom_mod_p(4, 2, 2) == 0
    assert binom_mod_p(3, 5, 7) == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_binom_matches_pascal(p):
    rows = oracles.pascal_mod(64, p)
    for n, row in enumerate(rows):
        for k, v in enumerate(row):
            assert binom_mod_p(n, k, p) == v


@pytest.mark.parametrize("p,r", PRIME_POWERS_128)
def test_lemma_binomial_of_q_minus_one(p, r):
    n = p**r - 1
    for d in range(n + 1):
        assert binom_mod_p(n, d, p) == (-1) ** d % p


@given(st.sampled_from([4, 8, 9, 16, 25, 27, 32]), st.data())
def test_field_laws_random(q, data):
    F = field_of_order(q)
    el = st.integers(0, q - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a
    n = data.draw(st.integers(-50, 50))
    if a or n >= 0:
        want = oracles.power_by_squaring(F, a if n >= 0 else F.inv(a), abs(n))
        assert F.pow(a, n) == want
