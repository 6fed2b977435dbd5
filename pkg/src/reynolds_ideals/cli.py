"""Command-line front end.

Subcommands: build, invariants, compare, sweep, oracle.  The parameter
flag is --s for every family; for the semidihedral families it plays
the role of t.  Exit codes: 0 success (INCONCLUSIVE included), 1 usage
or validation error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from .core import algebra_from_json, algebra_to_json
from .errors import InvariantViolation
from .families import FamilyParams, build_family, expected_t1_dim
from .oracle import OracleLimit, oracle_check
from .reynolds import (
    ReynoldsReport,
    analyze,
    compare_fingerprints,
    fingerprint_from_report,
)

__all__ = ["main", "entry"]

CSV_HEADER = (
    "family,k,s,c,p,dim,dim_Z,dim_K,dim_T1,dim_T1_perp,verdict,"
    "dim_T1_c1,dim_T1_perp_c1,first_diff"
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="reynolds-ideals", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_args(p, with_c=True):
        p.add_argument("--family", choices=["d2b", "sd1", "sd2"], required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--s", type=int, required=True, help="s for d2b, t for sd1/sd2")
        if with_c:
            p.add_argument("--c", type=int, required=True, help="scalar, 0 or 1")
        p.add_argument("--p", type=int, default=2, help="field characteristic (default 2)")

    b = sub.add_parser("build", help="emit an algebra file for a family member")
    add_family_args(b)
    b.add_argument("--out", default=None)

    inv = sub.add_parser("invariants", help="full Reynolds-ideal report for one algebra")
    inv.add_argument("--family", choices=["d2b", "sd1", "sd2"])
    inv.add_argument("--k", type=int)
    inv.add_argument("--s", type=int)
    inv.add_argument("--c", type=int)
    inv.add_argument("--p", type=int, default=2)
    inv.add_argument("--file", default=None, help="algebra JSON file instead of family parameters")
    inv.add_argument("--tn-max", type=int, default=None)
    inv.add_argument("--format", choices=["json", "text", "csv"], default="json")
    inv.add_argument("--out", default=None)

    cmp_ = sub.add_parser("compare", help="compare the scalars c=0 and c=1 of one family member")
    add_family_args(cmp_, with_c=False)
    cmp_.add_argument("--tn-max", type=int, default=None)
    cmp_.add_argument("--format", choices=["json", "text"], default="text")
    cmp_.add_argument("--out", default=None)

    sw = sub.add_parser("sweep", help="tabulate a parameter grid")
    sw.add_argument("--family", choices=["d2b", "sd1", "sd2"], required=True)
    sw.add_argument("--k-max", type=int, required=True)
    sw.add_argument("--s-max", type=int, required=True)
    sw.add_argument("--p", type=int, default=2)
    sw.add_argument("--tn-max", type=int, default=None)
    sw.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    sw.add_argument("--out", default=None)

    orc = sub.add_parser("oracle", help="exhaustive enumeration cross-check (GF(2), small dims)")
    add_family_args(orc)
    orc.add_argument("--max-dim", type=int, default=16)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _params(args) -> FamilyParams:
    return FamilyParams(family=args.family, k=args.k, s=args.s, c=args.c, p=args.p)


def _meta(params: FamilyParams) -> dict:
    meta = {"family": params.family, "k": params.k, "s": params.s, "c": params.c, "p": params.p}
    if params.p != 2:
        meta["note"] = "p != 2 lies outside the characteristic-2 separation results"
    return meta


def _report_text(report: ReynoldsReport) -> str:
    lines = []
    if report.meta:
        lines.append(" ".join(f"{k}={v}" for k, v in report.meta.items()))
    lines.append(f"dim A          = {report.dim}")
    lines.append(f"dim Z(A)       = {report.dim_center}")
    lines.append(f"dim K(A)       = {report.dim_commutator}")
    if report.cartan is not None:
        lines.append(f"cartan         = {[list(r) for r in report.cartan]}")
    lines.append("n  dim T_n  dim T_n^perp  radical layers of Z/T_n^perp")
    for row in report.chain:
        layers = ",".join(str(x) for x in row.radical_layers)
        lines.append(f"{row.n:<2} {row.dim_t:<8} {row.dim_t_perp:<13} {layers}")
    if report.truncated:
        lines.append("chain not stabilized within n_max (truncated)")
    else:
        lines.append(f"stabilized at n = {report.n_stab}")
    return "\n".join(lines) + "\n"


def _report_csv(report: ReynoldsReport) -> str:
    meta = report.meta or {}
    first = report.chain[0] if report.chain else None
    row = [
        str(meta.get("family", "")),
        str(meta.get("k", "")),
        str(meta.get("s", "")),
        str(meta.get("c", "")),
        str(report.p),
        str(report.dim),
        str(report.dim_center),
        str(report.dim_commutator),
        str(first.dim_t if first else ""),
        str(first.dim_t_perp if first else ""),
        "",
        "",
        "",
        "",
    ]
    return CSV_HEADER + "\n" + ",".join(row) + "\n"


def _cmd_build(args) -> int:
    params = _params(args)
    algebra = build_family(params)
    _emit(algebra_to_json(algebra), args.out)
    return 0


def _cmd_invariants(args) -> int:
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            algebra = algebra_from_json(fh.read())
        meta = None
    else:
        missing = [n for n in ("family", "k", "s", "c") if getattr(args, n) is None]
        if missing:
            raise UsageError("invariants requires --file or all of --family/--k/--s/--c")
        params = _params(args)
        algebra = build_family(params)
        meta = _meta(params)
    report = analyze(algebra, n_max=args.tn_max, meta=meta)
    if args.format == "json":
        _emit(report.to_json(), args.out)
    elif args.format == "text":
        _emit(_report_text(report), args.out)
    else:
        _emit(_report_csv(report), args.out)
    return 0


def _cmd_compare(args) -> int:
    p0 = FamilyParams(family=args.family, k=args.k, s=args.s, c=0, p=args.p)
    p1 = FamilyParams(family=args.family, k=args.k, s=args.s, c=1, p=args.p)
    r0 = analyze(build_family(p0), n_max=args.tn_max, meta=_meta(p0))
    r1 = analyze(build_family(p1), n_max=args.tn_max, meta=_meta(p1))
    result = compare_fingerprints(fingerprint_from_report(r0), fingerprint_from_report(r1))
    if args.format == "json":
        doc = {
            "family": args.family,
            "k": args.k,
            "s": args.s,
            "p": args.p,
            "verdict": result.verdict,
            "first_difference": None
            if result.field is None
            else {"field": result.field, "c0": result.value_a, "c1": result.value_b},
            "truncated": result.truncated,
            "fingerprints": {
                "c0": result.fingerprint_a.payload,
                "c1": result.fingerprint_b.payload,
            },
        }
        import json as _json

        _emit(_json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _emit(result.describe() + "\n", args.out)
    return 0


def _sweep_cells(family: str, k_max: int, s_max: int):
    s_min = 1 if family == "d2b" else 2
    for k in range(1, k_max + 1):
        for s in range(s_min, s_max + 1):
            if family == "sd2" and k + s < 4:
                continue
            yield k, s


def _cmd_sweep(args) -> int:
    rows = []
    for k, s in _sweep_cells(args.family, args.k_max, args.s_max):
        p0 = FamilyParams(family=args.family, k=k, s=s, c=0, p=args.p)
        p1 = FamilyParams(family=args.family, k=k, s=s, c=1, p=args.p)
        r0 = analyze(build_family(p0), n_max=args.tn_max, meta=_meta(p0))
        r1 = analyze(build_family(p1), n_max=args.tn_max, meta=_meta(p1))
        result = compare_fingerprints(fingerprint_from_report(r0), fingerprint_from_report(r1))
        rows.append(
            {
                "family": args.family,
                "k": k,
                "s": s,
                "p": args.p,
                "dim": r0.dim,
                "dim_Z": r0.dim_center,
                "dim_K": r0.dim_commutator,
                "dim_T1_c0": r0.chain[0].dim_t,
                "dim_T1_perp_c0": r0.chain[0].dim_t_perp,
                "dim_T1_c1": r1.chain[0].dim_t,
                "dim_T1_perp_c1": r1.chain[0].dim_t_perp,
                "verdict": result.verdict,
                "first_diff": result.field or "",
            }
        )
    if args.format == "json":
        import json as _json

        doc = {
            "family": args.family,
            "p": args.p,
            "k_max": args.k_max,
            "s_max": args.s_max,
            "rows": rows,
        }
        _emit(_json.dumps(doc, indent=2) + "\n", args.out)
    elif args.format == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(
                ",".join(
                    str(x)
                    for x in (
                        r["family"],
                        r["k"],
                        r["s"],
                        0,
                        r["p"],
                        r["dim"],
                        r["dim_Z"],
                        r["dim_K"],
                        r["dim_T1_c0"],
                        r["dim_T1_perp_c0"],
                        r["verdict"],
                        r["dim_T1_c1"],
                        r["dim_T1_perp_c1"],
                        r["first_diff"],
                    )
                )
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        header = (
            f"{'k':>2} {'s':>2} {'dim':>4} {'dim_Z':>5} {'dim_K':>5} "
            f"{'T1(c0)':>7} {'T1(c1)':>7} verdict"
        )
        lines = [f"family {args.family}, p = {args.p}", header]
        for r in rows:
            lines.append(
                f"{r['k']:>2} {r['s']:>2} {r['dim']:>4} {r['dim_Z']:>5} {r['dim_K']:>5} "
                f"{r['dim_T1_c0']:>7} {r['dim_T1_c1']:>7} {r['verdict']}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_oracle(args) -> int:
    params = _params(args)
    algebra = build_family(params)
    limit = OracleLimit(max_dim=args.max_dim)
    result = oracle_check(algebra, limit)
    expected = expected_t1_dim(params)
    lines = []
    for name in ("t1", "center", "socle"):
        lines.append(f"{name}: dim {result.dims[name]} (enumerated)")
    if expected is not None:
        lines.append(f"closed-form dim T_1 = {expected}")
    lines.append("PASS" if result.passed else "FAIL: " + "; ".join(result.mismatches))
    sys.stdout.write("\n".join(lines) + "\n")
    if not result.passed:
        raise InvariantViolation("; ".join(result.mismatches))
    if expected is not None and expected != result.dims["t1"]:
        raise InvariantViolation(
            f"closed-form dim T_1 = {expected} but enumeration found {result.dims['t1']}"
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "build":
            return _cmd_build(args)
        if args.command == "invariants":
            return _cmd_invariants(args)
        if args.command == "compare":
            return _cmd_compare(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_oracle(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
