"""Concrete-instance checks relating GRM codes and radical powers.

Every check returns :class:`CheckReport` objects.  A failing report always
carries a ``counterexample`` entry in its evidence.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Sequence

import numpy as np

from . import algebra
from .algebra import (
    b_poly,
    code_dim_count,
    interpolant_degrees,
    multi_indices,
    radical_dim,
    radical_indices,
    radical_matrix,
    theta,
    weight_counts,
)
from .codes import CodeSpec, grm_generator
from .errors import NonPrimeP, NoSeparator, NotNonPrime
from .gf import FieldSpec, binom_mod_p, field_of_order, is_prime, make_field
from .interp import a_coeff_table, h_closed, h_multi, h_poly, h_prime_forms, prime_field, signed_binom
from .linalg import MatrixGF, fingerprint, in_rowspace, rank, same_rowspace
from .poly import UniPoly


@dataclass
class CheckReport:
    check_id: str
    params: dict
    verdict: str
    evidence: dict = dc_field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "check_id": self.check_id,
            "params": self.params,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }
        if timing:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, default=_jsonable)


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.integer):
        return int(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def _report(check_id: str, params: dict, ok: bool, evidence: dict, t0: float,
            counterexample: Any = None) -> CheckReport:
    if not ok:
        if counterexample is None:
            raise AssertionError(f"{check_id}: failing check without a counterexample")
        evidence = dict(evidence, counterexample=counterexample)
    return CheckReport(check_id, params, "pass" if ok else "fail", evidence, time.perf_counter() - t0)


def _field_params(F: FieldSpec) -> dict:
    return {"p": F.p, "r": F.r, "q": F.q}


def _separating_row(A: MatrixGF, B: MatrixGF) -> list[int] | None:
    """A row of A outside rowspace(B), or a row of B outside rowspace(A)."""
    for X, Y in ((A, B), (B, A)):
        for row in X.data:
            if not in_rowspace(Y, row):
                return row.tolist()
    return None


def _compare_spaces(F: FieldSpec, m: int, nu: int, d: int):
    code = grm_generator(CodeSpec(F, m, nu)).matrix
    rad = radical_matrix(F, m, d)
    evidence = {
        "code_dim": rank(code),
        "radical_dim": rank(rad),
        "code_fingerprint": fingerprint(code),
        "radical_fingerprint": fingerprint(rad),
    }
    return code, rad, evidence


# -- prime fields


def check_bch(p: int, m: int, ordering: str = "natural") -> list[CheckReport]:
    """C_nu(m, p) == M^{m(p-1)-nu} for every order nu over the prime field F_p."""
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    F = make_field(p, 1, ordering)
    algebra._check_size(p, m)
    top = m * (p - 1)
    reports = []
    for nu in range(top + 1):
        t0 = time.perf_counter()
        d = top - nu
        code, rad, ev = _compare_spaces(F, m, nu, d)
        degs = interpolant_degrees(F, m, rad.data)
        max_deg = int(degs.max()) if degs.size else -1
        ev["max_interpolant_degree"] = max_deg
        equal = same_rowspace(code, rad)
        contained = max_deg <= nu
        cex = None
        if not equal:
            cex = {"vector": _separating_row(rad, code)}
        elif not contained:
            bad = int(np.argmax(degs))
            cex = {"index": list(radical_indices(p, m, d)[bad]), "degree": int(degs[bad])}
        params = {"p": p, "m": m, "nu": nu, "d": d, "ordering": ordering}
        reports.append(_report("bch", params, equal and contained, ev, t0, cex))
    return reports


# -- non-prime fields


def staircase_witness(q: int, m: int, i: int) -> tuple[tuple[int, ...], int]:
    """The witness index the non-prime proof uses for M^i != C_{m(q-1)-i}, and its claimed degree."""
    top = m * (q - 1)
    if not 2 <= i <= top - 1:
        raise ValueError(f"i = {i} outside [2, {top - 1}]")
    if i <= m:
        zeros = m - i + 1
        w = (0,) * zeros + (2,) + (1,) * (i - 2)
        return w, top - (i - 1)
    for k in range(1, m + 1):
        if top - k * (q - 2) + 1 <= i <= top - k:
            return (q - 2,) * k + (q - 1,) * (m - k), k * (q - 2)
    raise AssertionError("staircase does not cover i")  # pragma: no cover


def _nonprime_field(q: int | FieldSpec) -> FieldSpec:
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    if F.r == 1:
        raise NotNonPrime(f"q = {F.q} is prime; use check_bch")
    return F


def find_separating_vector(q: int | FieldSpec, m: int, i: int) -> tuple[tuple[int, ...], dict]:
    """A multi-index j with |j| >= i whose interpolant has degree > m(q-1) - i.

    The basis vector B_j then lies in M^i but not in C_{m(q-1)-i}.  The
    proof's staircase witness is returned when it validates; otherwise the
    first qualifying index of the radical basis in rank order.
    """
    F = _nonprime_field(q)
    q = F.q
    nu = m * (q - 1) - i
    idx = radical_indices(q, m, i)
    degs = interpolant_degrees(F, m, radical_matrix(F, m, i).data)
    hits = np.flatnonzero(degs > nu)
    generic = tuple(idx[int(hits[0])]) if hits.size else None

    stair, claimed = staircase_witness(q, m, i)
    stair_deg = h_multi(F, stair).total_degree
    stair_ok = sum(stair) >= i and stair_deg == claimed and stair_deg > nu
    evidence = {
        "nu": nu,
        "staircase_witness": list(stair),
        "staircase_claimed_degree": claimed,
        "staircase_degree": stair_deg,
        "staircase_valid": stair_ok,
        "first_witness": list(generic) if generic else None,
        "first_witness_degree": int(degs[hits[0]]) if hits.size else None,
    }
    if stair_ok:
        return stair, dict(evidence, degree=stair_deg)
    if generic is None:
        raise NoSeparator(f"no separating basis vector for q={q}, m={m}, i={i}")
    return generic, dict(evidence, degree=evidence["first_witness_degree"])


def _equality_report(F: FieldSpec, m: int, i: int, t0: float) -> CheckReport:
    top = m * (F.q - 1)
    nu = top - i
    code, rad, ev = _compare_spaces(F, m, nu, i)
    ok = same_rowspace(code, rad)
    cex = None if ok else {"vector": _separating_row(rad, code)}
    params = dict(_field_params(F), m=m, i=i, nu=nu)
    return _report("nonprime.equal", params, ok, ev, t0, cex)


def _inequality_report(F: FieldSpec, m: int, i: int, t0: float) -> CheckReport:
    top = m * (F.q - 1)
    nu = top - i
    code, rad, ev = _compare_spaces(F, m, nu, i)
    dims_equal = ev["code_dim"] == ev["radical_dim"] == radical_dim(F.q, m, i) == code_dim_count(F.q, m, nu)
    differ = not same_rowspace(code, rad)
    ev["dims_equal"] = dims_equal
    params = dict(_field_params(F), m=m, i=i, nu=nu)
    try:
        w, wev = find_separating_vector(F, m, i)
    except NoSeparator:
        return _report("nonprime.differ", params, False, ev, t0, {"index": i, "reason": "no separator"})
    v = b_poly(F, w).coeffs
    in_rad = in_rowspace(rad, v)
    in_code = in_rowspace(code, v)
    ev.update(witness=list(w), witness_degree=wev["degree"], witness_evidence=wev,
              witness_in_radical=in_rad, witness_in_code=in_code)
    ok = dims_equal and differ and in_rad and not in_code
    cex = None
    if not ok:
        cex = {"index": list(w), "vector": v.tolist()}
    return _report("nonprime.differ", params, ok, ev, t0, cex)


def check_nonprime(q: int, m: int) -> list[CheckReport]:
    """Equalities at i in {m(q-1), 1, 0}; inequality with equal dimensions for 2 <= i <= m(q-1)-1."""
    F = _nonprime_field(q)
    algebra._check_size(F.q, m)
    top = m * (F.q - 1)
    reports = []
    for i in sorted({top, 1, 0}, reverse=True):
        reports.append(_equality_report(F, m, i, time.perf_counter()))
    for i in range(top - 1, 1, -1):
        reports.append(_inequality_report(F, m, i, time.perf_counter()))
    return reports


# -- interpolation identities


def _poly_check(check_id: str, params: dict, got: UniPoly, want: UniPoly, t0: float, **extra) -> CheckReport:
    ok = got == want
    ev = dict(extra, got=list(got.coeffs), expected=list(want.coeffs))
    cex = None if ok else {"got": list(got.coeffs), "expected": list(want.coeffs)}
    return _report(check_id, params, ok, ev, t0, cex)


def _all_check(check_id: str, params: dict, cases, predicate: Callable, t0: float, **extra) -> CheckReport:
    """Pass iff ``predicate`` holds for every case; the first failing case is the counterexample."""
    n = 0
    for case in cases:
        n += 1
        if not predicate(case):
            return _report(check_id, params, False, dict(extra, cases=n), t0, {"case": list(case)})
    return _report(check_id, params, True, dict(extra, cases=n), t0)


def h2_printed_form(F: FieldSpec) -> UniPoly:
    """-sum_{k=0}^{q-2} (2 - alpha^-k) Y^k; equals H_2 only in characteristic 2."""
    a = F.alpha.value
    return -UniPoly(F, [F.sub(F.embed(2), F.pow(a, -k)) for k in range(F.q - 1)])


def h2_signed_form(F: FieldSpec) -> UniPoly:
    """sum_{k=0}^{q-2} (2 - alpha^-k) Y^k, the coefficient extraction of the closed form at i=2."""
    return -h2_printed_form(F)


def check_binom_q_minus_one(p: int, r: int) -> CheckReport:
    t0 = time.perf_counter()
    n = p**r - 1
    return _all_check(
        "binom.q_minus_one", {"p": p, "r": r}, ((d,) for d in range(n + 1)),
        lambda c: binom_mod_p(n, c[0], p) == (-1) ** c[0] % p, t0,
    )


def check_interp_suite(q: int) -> list[CheckReport]:
    F = field_of_order(q)
    base = _field_params(F)
    reports = []

    t0 = time.perf_counter()
    reports.append(_all_check(
        "interp.closed_form", base, ((i,) for i in range(q)),
        lambda c: h_closed(F, c[0]) == h_poly(F, c[0]), t0,
    ))

    def value_law(c):
        i, j = c
        got = h_poly(F, i)(F(F.beta(j))).value
        return got == (signed_binom(F, i, j) if j <= i else 0)

    t0 = time.perf_counter()
    reports.append(_all_check("interp.value_law", base, itertools.product(range(q), repeat=2), value_law, t0))

    t0 = time.perf_counter()
    reports.append(_all_check(
        "interp.reconstruction", base, ((i,) for i in range(q)),
        lambda c: [h_poly(F, c[0])(F(F.beta(j))).value for j in range(q)] == b_poly(F, c).tolist(), t0,
    ))

    one = UniPoly.constant(F, 1)
    t0 = time.perf_counter()
    h1 = -UniPoly(F, [1] * (q - 1))
    reports.append(_poly_check("interp.h1", base, h_poly(F, 1), h1, t0))
    if q >= 3:
        t0 = time.perf_counter()
        reports.append(_poly_check("interp.h2_printed", base, h_poly(F, 2), h2_printed_form(F), t0))
        t0 = time.perf_counter()
        reports.append(_poly_check("interp.h2", base, h_poly(F, 2), h2_signed_form(F), t0))
    t0 = time.perf_counter()
    reports.append(_poly_check("interp.h_top", base, h_poly(F, q - 1), one, t0))
    t0 = time.perf_counter()
    reports.append(_poly_check("interp.h0", base, h_poly(F, 0), one - UniPoly.monomial(F, q - 1), t0))

    reports.append(check_binom_q_minus_one(F.p, F.r))

    if F.r > 1:
        t0 = time.perf_counter()
        deg = h_poly(F, q - 2).degree
        ok = deg == q - 2
        reports.append(_report("interp.nonprime_degree", base, ok, {"degree": deg}, t0, None if ok else {"index": q - 2, "degree": deg}))
    else:
        reports.extend(_prime_interp_reports(q))
    return reports


def _prime_interp_reports(p: int) -> list[CheckReport]:
    Fn = prime_field(p)
    base = {"p": p, "r": 1, "q": p, "ordering": "natural"}
    reports = []

    t0 = time.perf_counter()
    table = a_coeff_table(p)
    checks = {
        "recurrence": table.recurrence_holds(),
        "vanishing": table.vanishes_below_diagonal(),
        "diagonal": table.diagonal_nonzero(),
    }
    ok = all(checks.values())
    reports.append(_report("prime.coeff_table", base, ok, checks, t0, None if ok else {"table": [list(r) for r in table.entries]}))

    for name, attr in (("prime.coeff_form", "coeff_form"), ("prime.product_formula", "product_form"),
                       ("prime.backward_recurrence", "recurrence_form")):
        t0 = time.perf_counter()
        reports.append(_all_check(
            name, base, ((i,) for i in range(p)),
            lambda c, attr=attr: getattr(h_prime_forms(p, c[0]), attr) == h_poly(Fn, c[0]), t0,
        ))

    t0 = time.perf_counter()
    degs = [h_poly(Fn, i).degree for i in range(p)]
    ok = degs == [p - 1 - i for i in range(p)]
    reports.append(_report("prime.degree", base, ok, {"degrees": degs}, t0, None if ok else {"degrees": degs}))
    return reports


# -- dimensions


def check_duality(q: int, m: int) -> CheckReport:
    t0 = time.perf_counter()
    top = m * (q - 1)
    rad = [radical_dim(q, m, d) for d in range(top + 1)]
    code = [code_dim_count(q, m, top - d) for d in range(top + 1)]
    ev: dict = {"radical_dims": rad, "code_dims": code}
    cex = None
    ok = rad == code
    if not ok:
        d = next(d for d in range(top + 1) if rad[d] != code[d])
        cex = {"d": d, "radical_dim": rad[d], "code_dim": code[d]}
    if ok and q**m <= 4096:
        idx = multi_indices(q, m)
        brute = [sum(1 for i in idx if sum(i) == s) for s in range(top + 1)]
        ev["enumerated"] = True
        if brute != list(weight_counts(q, m)):
            ok = False
            cex = {"weight_counts": list(weight_counts(q, m)), "enumerated": brute}
        else:
            bad = next((i for i in idx if theta(theta(i, q), q) != i
                        or sum(theta(i, q)) != top - sum(i)), None)
            if bad is not None:
                ok = False
                cex = {"index": list(bad)}
    return _report("duality", {"q": q, "m": m}, ok, ev, t0, cex)


# -- the q = 8, m = 3 example

EXAMPLE_DEGREES = {(6, 7, 7): 6, (6, 6, 7): 12, (6, 6, 6): 18, (0, 2, 1): 19, (0, 0, 2): 20}

# witness index named for each inequality M^i != C_{21-i}
EXAMPLE_WITNESSES = {
    **{i: (6, 7, 7) for i in range(16, 21)},
    **{i: (6, 6, 7) for i in range(10, 16)},
    **{i: (6, 6, 6) for i in range(4, 10)},
    3: (0, 2, 1),
    2: (0, 0, 2),
}


def run_section6() -> list[CheckReport]:
    F = field_of_order(8)
    m = 3
    base = dict(_field_params(F), m=m)
    reports = []
    for idx, claimed in EXAMPLE_DEGREES.items():
        t0 = time.perf_counter()
        deg = h_multi(F, idx).total_degree
        ok = deg == claimed
        reports.append(_report("example.degree", dict(base, index=list(idx)), ok,
                               {"degree": deg, "claimed": claimed}, t0,
                               None if ok else {"index": list(idx), "degree": deg}))

    t0 = time.perf_counter()
    rep = _equality_report(F, m, 21, t0)
    dims_one = rep.evidence["code_dim"] == rep.evidence["radical_dim"] == 1
    if rep.passed and not dims_one:
        rep = _report("nonprime.equal", rep.params, False, rep.evidence, t0,
                      {"dims": [rep.evidence["code_dim"], rep.evidence["radical_dim"]]})
    reports.append(rep)

    for i in range(20, 1, -1):
        t0 = time.perf_counter()
        rep = _inequality_report(F, m, i, t0)
        named = EXAMPLE_WITNESSES[i]
        if rep.passed and tuple(rep.evidence["witness"]) != named:
            rep = _report(rep.check_id, rep.params, False, rep.evidence, t0,
                          {"index": rep.evidence["witness"], "expected": list(named)})
        reports.append(rep)
    return reports


# -- everything


def run_all() -> list[CheckReport]:
    reports: list[CheckReport] = []
    for p, m in ((2, 2), (2, 3), (3, 2), (5, 2), (7, 1)):
        reports.extend(check_bch(p, m))
    for q, m in ((4, 1), (4, 2), (8, 1), (9, 1)):
        reports.extend(check_nonprime(q, m))
    for q in (2, 3, 4, 5, 7, 8, 9):
        reports.extend(check_interp_suite(q))
    for q, m in ((4, 2), (8, 3)):
        reports.append(check_duality(q, m))
    reports.extend(run_section6())
    return reports
