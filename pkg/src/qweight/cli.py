"""Command-line front end.

    qweight weight -n 3 -d 5 -q 2 [--json] [--strict]
    qweight verify --n-max 8 --d-max 30 --q-max 5
    qweight sweep -n 3 --d-min 4 --d-max 200 -q 2 5 --coprime-only [--csv|--json]
    qweight semigroup 3 5 [--limit N]

Exit codes: 0 success, 2 invalid parameters, 3 verification mismatch,
4 query not determined by (n, d, q).
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import _core
from .curve import CurveFamily, QDifferentialSpace
from .errors import InvalidFamilyError, QWeightError, UnsupportedQueryError
from .semigroup import SemigroupPair, frobenius_number, gap_count, gap_set, gap_sum
from .verify import grid_is_empty, verify_grid
from .weights import branch_weight_report

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_UNSUPPORTED = 4

SWEEP_COLUMNS = [
    "n", "d", "q", "gcd", "genus", "dim",
    "affine_weight", "infinity_weight", "branch_total",
    "proportion", "proportion_decimal", "asymptotic_bound", "deviation",
]

_INT64 = 1 << 63


def decimal_str(x, digits=6):
    """Render a Fraction with `digits` places, rounding half to even."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled, rem = divmod(x.numerator * 10 ** digits, x.denominator)
    twice = 2 * rem
    if twice > x.denominator or (twice == x.denominator and scaled % 2):
        scaled += 1
    whole, frac = divmod(scaled, 10 ** digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def ratio_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def json_num(v):
    # integers outside int64 go out as strings so consumers don't lose precision
    if isinstance(v, int) and not isinstance(v, bool) and not -_INT64 <= v < _INT64:
        return str(v)
    return v


def report_row(fam, q, precision=6):
    """One sweep row as a dict of JSON-ready values (None for blanks)."""
    r = branch_weight_report(fam, q)
    row = {
        "n": fam.n,
        "d": fam.d,
        "q": q,
        "gcd": fam.G,
        "genus": fam.g,
        "dim": QDifferentialSpace(fam, q).dim,
        "affine_weight": r.affine_weight,
        "infinity_weight": r.infinity_weight,
        "branch_total": r.branch_total,
        "proportion": None,
        "proportion_decimal": None,
        "asymptotic_bound": ratio_str(r.asymptotic_bound),
        "deviation": None,
    }
    if r.proportion is not None:
        row["proportion"] = ratio_str(r.proportion)
        row["proportion_decimal"] = decimal_str(r.proportion, precision)
        row["deviation"] = ratio_str(abs(r.proportion - r.asymptotic_bound))
    return {k: json_num(v) for k, v in row.items()}


def _fail(code, reason, message):
    print(json.dumps({"error": reason, "message": message}), file=sys.stderr)
    return code


def _fmt(args):
    if args.json:
        return "json"
    if args.csv:
        return "csv"
    return "text"


def cmd_weight(args, out):
    fam = CurveFamily(args.n, args.d)
    q = args.q
    if args.strict and fam.G != 1:
        raise UnsupportedQueryError(
            f"weight at infinity for gcd({fam.n}, {fam.d}) = {fam.G} > 1 requires f"
        )
    r = branch_weight_report(fam, q)
    if _fmt(args) == "json":
        obj = {
            "n": fam.n, "d": fam.d, "q": q, "gcd": fam.G, "genus": fam.g,
            "dim": QDifferentialSpace(fam, q).dim,
            "affine_weight": r.affine_weight,
            "infinity_weight": r.infinity_weight,
            "branch_total": r.branch_total,
            "curve_total": r.curve_total,
            "proportion": ratio_str(r.proportion) if r.proportion is not None else None,
            "proportion_decimal": decimal_str(r.proportion, args.precision) if r.proportion is not None else None,
            "asymptotic_bound": ratio_str(r.asymptotic_bound),
        }
        out.write(json.dumps({k: json_num(v) for k, v in obj.items()}) + "\n")
        return EXIT_OK
    missing = "requires f; gcd(n,d)>1"
    lines = [
        f"family      y^{fam.n} = f(x), deg f = {fam.d}, gcd = {fam.G}, genus = {fam.g}",
        f"q           {q} (d_q = {QDifferentialSpace(fam, q).dim})",
        f"affine      {r.affine_weight}",
        f"infinity    {r.infinity_weight if r.infinity_weight is not None else missing}",
        f"BW_q        {r.branch_total if r.branch_total is not None else missing}",
        f"total       {r.curve_total}",
    ]
    if r.proportion is not None:
        lines.append(f"proportion  {ratio_str(r.proportion)} ({decimal_str(r.proportion, args.precision)})")
    else:
        lines.append(f"proportion  {missing}")
    lines.append(f"bound       {ratio_str(r.asymptotic_bound)} ({decimal_str(r.asymptotic_bound, args.precision)})")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    box = (args.n_min, args.n_max, args.d_min, args.d_max, args.q_min, args.q_max)
    if grid_is_empty(*box):
        return _fail(EXIT_INVALID, "empty_grid", "empty grid: no valid (n, d, q) in the given bounds")
    res = verify_grid(*box)
    if res.ok:
        out.write(f"all {res.checks} checks passed ({res.families} families, backend {_core.BACKEND})\n")
        return EXIT_OK
    for f in res.failures:
        out.write(f"FAIL {f}\n")
    out.write(f"{len(res.failures)} of {res.checks} checks failed\n")
    return EXIT_MISMATCH


def sweep_rows(n, d_min, d_max, q_list, coprime_only=False, precision=6):
    if n < 2 or not n < d_min <= d_max:
        raise QWeightError(f"need 2 <= n < d_min <= d_max, got n={n}, d=[{d_min}, {d_max}]", reason="invalid_sweep")
    if not q_list or any(q < 1 for q in q_list):
        raise QWeightError(f"every q must be >= 1, got {q_list}", reason="invalid_sweep")
    rows = []
    for d in range(d_min, d_max + 1):
        try:
            fam = CurveFamily(n, d)
        except InvalidFamilyError:
            continue
        if coprime_only and fam.G != 1:
            continue
        for q in q_list:
            rows.append(report_row(fam, q, precision))
    return rows


def cmd_sweep(args, out):
    rows = sweep_rows(args.n, args.d_min, args.d_max, args.q, args.coprime_only, args.precision)
    fmt = _fmt(args)
    if fmt == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: "" if v is None else v for k, v in row.items()})
        out.write(buf.getvalue())
    else:
        cols = ["d", "q", "gcd", "genus", "dim", "affine_weight", "infinity_weight",
                "branch_total", "proportion_decimal", "asymptotic_bound"]
        table = [cols] + [["" if r[c] is None else str(r[c]) for c in cols] for r in rows]
        widths = [max(len(t[i]) for t in table) for i in range(len(cols))]
        for t in table:
            out.write("  ".join(v.rjust(wd) for v, wd in zip(t, widths)) + "\n")
    return EXIT_OK


def cmd_semigroup(args, out):
    s = SemigroupPair(args.a, args.b)
    fmt = _fmt(args)
    if not s.coprime:
        if fmt == "json":
            out.write(json.dumps({"a": s.a, "b": s.b, "gaps": None, "count": "infinite",
                                  "sum": "infinite", "frobenius": None}) + "\n")
        else:
            out.write(f"<{s.a}, {s.b}>: infinite gap set (gcd > 1)\ncount      infinite\nsum        infinite\n")
        return EXIT_OK
    gaps = gap_set(s)
    count, total, frob = gap_count(s), gap_sum(s), frobenius_number(s)
    agree = len(gaps) == count and gaps.sum() == total and (max(gaps, default=-1) == frob)
    if fmt == "json":
        out.write(json.dumps({
            "a": s.a, "b": s.b,
            "gaps": [json_num(g) for g in list(gaps)[:args.limit]],
            "elided": max(len(gaps) - args.limit, 0),
            "count": json_num(count), "sum": json_num(total), "frobenius": json_num(frob),
            "agrees": agree,
        }) + "\n")
    else:
        shown = ", ".join(str(g) for g in list(gaps)[:args.limit])
        if len(gaps) > args.limit:
            shown += f", ... ({len(gaps) - args.limit} more)"
        out.write(
            f"gaps       {{{shown}}}\n"
            f"count      {count}\n"
            f"sum        {total}\n"
            f"frobenius  {frob}\n"
            f"agreement  {'closed forms match enumeration' if agree else 'MISMATCH'}\n"
        )
    return EXIT_OK if agree else EXIT_MISMATCH


def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", **kw)
    fmt.add_argument("--csv", action="store_true", **kw)
    p.add_argument("--precision", type=int, metavar="N", help="decimal places (default 6)",
                   **({"default": argparse.SUPPRESS} if suppress else {"default": 6}))
    p.add_argument("--limit", type=int, metavar="N", help="max gaps listed (default 20)",
                   **({"default": argparse.SUPPRESS} if suppress else {"default": 20}))
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="qweight", parents=[_common(False)],
                                     description="q-Weierstrass weights of branch points on y^n = f(x)")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(True)

    p = sub.add_parser("weight", parents=[common], help="branch weights for one (n, d, q)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-q", type=int, default=2)
    p.add_argument("--strict", action="store_true", help="fail (exit 4) when gcd(n, d) > 1")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("verify", parents=[common], help="closed forms vs enumeration over a grid")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--d-min", type=int, default=3)
    p.add_argument("--d-max", type=int, default=30)
    p.add_argument("--q-min", type=int, default=1)
    p.add_argument("--q-max", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="table of weights over a range of d")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("-q", type=int, nargs="+", default=[2])
    p.add_argument("--coprime-only", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("semigroup", parents=[common], help="gaps of the semigroup <a, b>")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_semigroup)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.precision < 0 or args.limit < 0:
        return _fail(EXIT_INVALID, "invalid_parameter", "--precision and --limit must be >= 0")
    try:
        return args.func(args, out)
    except UnsupportedQueryError as exc:
        return _fail(EXIT_UNSUPPORTED, exc.reason, str(exc))
    except QWeightError as exc:
        return _fail(EXIT_INVALID, exc.reason, str(exc))


if __name__ == "__main__":
    sys.exit(main())
