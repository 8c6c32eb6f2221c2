"""Command-line front end.

Exit status: 0 on success, 1 when a verification check fails, 2 on usage or
validation errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from . import verify
from .algebra import code_dim_count, radical_dim, radical_indices, radical_matrix
from .codes import CodeSpec, grm_generator
from .errors import GRMError, SizeExceeded
from .gf import MAX_FIELD_ORDER, FieldSpec, factor_prime_power, is_prime, make_field
from .interp import h_closed, h_poly, h_prime_forms
from .poly import MAX_AMBIENT_LENGTH


class UsageError(Exception):
    pass


def _add_field_args(p: argparse.ArgumentParser, ordering: bool = True) -> None:
    p.add_argument("--p", type=int, help="prime characteristic")
    p.add_argument("--r", type=int, help="extension degree (default 1 with --p)")
    p.add_argument("--q", type=int, help="field order p^r")
    if ordering:
        p.add_argument("--ordering", choices=("power", "natural"), default="power",
                       help="point enumeration: beta_k = alpha^(k-1) or beta_k = k (prime fields)")


def _add_common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--max-size", type=int, default=None, help="ceiling on q and on q^m")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grmrad",
        description="Generalized Reed-Muller codes and radical powers of F_q[X]/(X_l^q - 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe GF(q)")
    _add_field_args(p)
    _add_common(p)

    p = sub.add_parser("hpoly", help="interpolation polynomial H_i in every available form")
    _add_field_args(p)
    p.add_argument("--i", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("basis", help="radical basis of M^d as matrix rows")
    _add_field_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _add_common(p, ("text", "json", "csv"))

    p = sub.add_parser("code", help="GRM code generator matrix")
    p.add_argument("action", choices=("gen",))
    _add_field_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    _add_common(p, ("text", "json", "csv"))

    p = sub.add_parser("dim", help="dimensions of M^d and C_nu")
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--nu", type=int)
    _add_common(p)

    p = sub.add_parser("verify", help="run verification checks")
    p.add_argument("target", choices=("bch", "nonprime", "interp", "duality", "section6", "all"))
    _add_field_args(p, ordering=False)
    p.add_argument("--m", type=int)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in reports")
    _add_common(p)
    return parser


def _order(args) -> tuple[int, int]:
    if args.q is not None and (args.p is not None or args.r is not None):
        raise UsageError("give either --q or --p/--r, not both")
    if args.q is not None:
        try:
            return factor_prime_power(args.q)
        except GRMError as exc:
            raise UsageError(str(exc)) from None
    if args.p is None:
        raise UsageError("a field is required: --q or --p [--r]")
    if args.r is not None and args.r < 1:
        raise UsageError("--r must be >= 1")
    return args.p, args.r if args.r is not None else 1


def _field(args) -> FieldSpec:
    p, r = _order(args)
    ordering = getattr(args, "ordering", "power")
    if ordering == "natural" and r != 1:
        raise UsageError("natural ordering requires a prime field")
    return make_field(p, r, ordering, args.max_size or MAX_FIELD_ORDER)


def _need_m(args) -> int:
    if args.m is None or args.m < 1:
        raise UsageError("--m must be given and >= 1")
    limit = args.max_size or MAX_AMBIENT_LENGTH
    q = 1
    if getattr(args, "q", None) is not None or getattr(args, "p", None) is not None:
        p, r = _order(args)
        q = p**r
    if q**args.m > limit:
        raise SizeExceeded(f"q^m = {q}^{args.m} exceeds ceiling {limit}")
    return args.m


def _matrix_out(out, fmt: str, header: dict, rows: list[list[int]], labels: list[list[int]]) -> None:
    if fmt == "json":
        json.dump({"header": header, "rows": rows, "row_labels": labels}, out, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        out.write("# " + " ".join(f"{k}={_csv_meta(v)}" for k, v in header.items()) + "\n")
        for row in rows:
            out.write(",".join(map(str, row)) + "\n")
    else:
        for k, v in header.items():
            out.write(f"{k}: {v}\n")
        for lab, row in zip(labels, rows):
            out.write(f"{tuple(lab)}  {' '.join(map(str, row))}\n")


def _csv_meta(v) -> str:
    return ",".join(map(str, v)) if isinstance(v, list) else str(v)


def _cmd_field(args, out) -> int:
    F = _field(args)
    d = F.describe()
    if args.format == "json":
        out.write(json.dumps(d) + "\n")
    else:
        for k, v in d.items():
            out.write(f"{k}: {v}\n")
        out.write(f"points: {list(F.points)}\n")
    return 0


def _cmd_hpoly(args, out) -> int:
    F = _field(args)
    i = args.i
    forms = {"definition": h_poly(F, i)}
    if F.ordering == "power":
        forms["closed"] = h_closed(F, i)
    if F.r == 1 and F.ordering == "natural":
        forms.update(h_prime_forms(F.p, i)._asdict())
    if args.format == "json":
        payload = {
            "field": F.describe(),
            "i": i,
            "forms": {k: {"coeffs": list(f.coeffs), "degree": f.degree} for k, f in forms.items()},
            "agree": len({f.coeffs for f in forms.values()}) == 1,
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for name, f in forms.items():
            out.write(f"{name}: H_{i}(Y) = {f.to_text()}   [degree {f.degree}]\n")
    return 0


def _cmd_basis(args, out) -> int:
    F = _field(args)
    m = _need_m(args)
    M = radical_matrix(F, m, args.d)
    header = dict(F.describe(), m=m, d=args.d)
    _matrix_out(out, args.format, header, M.tolist(), [list(i) for i in radical_indices(F.q, m, args.d)])
    return 0


def _cmd_code(args, out) -> int:
    F = _field(args)
    m = _need_m(args)
    G = grm_generator(CodeSpec(F, m, args.nu), max_length=args.max_size or MAX_AMBIENT_LENGTH)
    header = G.header()
    if F.ordering != "power":
        header["ordering"] = F.ordering
    _matrix_out(out, args.format, header, G.matrix.tolist(), [list(j) for j in G.monomials])
    return 0


def _cmd_dim(args, out) -> int:
    p, r = _order(args)
    q = p**r
    m = _need_m(args)
    top = m * (q - 1)
    if args.d is not None:
        rows = [(args.d, top - args.d)]
    elif args.nu is not None:
        rows = [(top - args.nu, args.nu)]
    else:
        rows = [(d, top - d) for d in range(top + 1)]
    data = [{"d": d, "nu": nu, "radical_dim": radical_dim(q, m, d), "code_dim": code_dim_count(q, m, nu)}
            for d, nu in rows]
    if args.format == "json":
        out.write(json.dumps({"q": q, "m": m, "dims": data}, sort_keys=True) + "\n")
    else:
        for row in data:
            out.write(f"dim M^{row['d']} = {row['radical_dim']}   dim C_{row['nu']} = {row['code_dim']}\n")
    return 0


def _cmd_verify(args, out) -> int:
    target = args.target
    if target == "bch":
        p, r = _order(args)
        if r != 1 or not is_prime(p):
            raise UsageError(f"bch needs a prime field, got order {p}^{r}")
        reports = verify.check_bch(p, _need_m(args))
    elif target == "nonprime":
        p, r = _order(args)
        if r == 1:
            raise UsageError(f"{p} is prime; use 'verify bch'")
        reports = verify.check_nonprime(_field(args), _need_m(args))
    elif target == "interp":
        p, r = _order(args)
        reports = verify.check_interp_suite(p**r)
    elif target == "duality":
        p, r = _order(args)
        reports = [verify.check_duality(p**r, _need_m(args))]
    elif target == "section6":
        reports = verify.run_section6()
    else:
        reports = verify.run_all()

    for rep in reports:
        if args.format == "json":
            out.write(rep.to_json(args.timing) + "\n")
        else:
            params = " ".join(f"{k}={v}" for k, v in rep.params.items())
            line = f"{rep.verdict.upper():4}  {rep.check_id:28} {params}"
            if args.timing:
                line += f"  ({rep.elapsed:.3f}s)"
            out.write(line + "\n")
            if not rep.passed:
                out.write(f"      counterexample: {json.dumps(rep.evidence['counterexample'], default=str)}\n")
    failed = sum(not r.passed for r in reports)
    if args.format == "text":
        out.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return 1 if failed else 0


COMMANDS = {
    "field": _cmd_field,
    "hpoly": _cmd_hpoly,
    "basis": _cmd_basis,
    "code": _cmd_code,
    "dim": _cmd_dim,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        with contextlib.ExitStack() as stack:
            out = stack.enter_context(open(args.out, "w")) if args.out else sys.stdout
            return COMMANDS[args.command](args, out)
    except (UsageError, GRMError, ValueError) as exc:
        print(f"grmrad: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
