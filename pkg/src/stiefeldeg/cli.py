"""Command-line front end: ``stiefeldeg {degree,table,volume,gt-count,verify}``.

Exit status is 0 on success, 1 on a domain or consistency failure and 2 on
a usage error.  JSON output is ``{"command", "inputs", "result", "witnesses"}``
with every integer written as a decimal string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .degree import degree, degree_table
from .errors import ConsistencyError, DomainError
from .gt import count_invariants, enumerate_fillings
from .symb import lam_vars
from .verify import run_checks
from .volumes import vol_closed

EXPAND_MAX_RANK = 6


def stringify(obj):
    """Integers and fractions become strings, containers recurse, key order kept."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (int, Fraction)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify(v) for v in obj]
    return obj


def record(command: str, inputs: dict, result, witnesses: Optional[dict] = None) -> dict:
    return stringify({"command": command, "inputs": inputs, "result": result,
                      "witnesses": witnesses or {}})


def dumps(rec: dict) -> str:
    return json.dumps(rec, indent=2, ensure_ascii=False)


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


# -- subcommands -------------------------------------------------------------

def cmd_degree(args, out) -> int:
    res = degree(args.k, args.n, args.method)
    if args.format == "json":
        w = dict(res.witnesses)
        if "matrix" in w:
            w["matrix"] = [list(row) for row in w["matrix"]]
        out.write(dumps(record("degree", {"k": args.k, "n": args.n, "method": args.method},
                               {"degree": res.degree, "regime": res.regime,
                                "method": res.method}, w)) + "\n")
        return 0
    out.write(f"deg St({res.k},{res.n}) = {res.degree}\n")
    out.write(f"regime: {res.regime}  method: {res.method}\n")
    w = res.witnesses
    if "matrix" in w:
        out.write("path matrix:\n")
        for row in w["matrix"]:
            out.write("  [" + ", ".join(map(str, row)) + "]\n")
        out.write(f"det = {w['det']}\n")
    elif "path_count" in w:
        out.write(f"non-intersecting path tuples = {w['path_count']}\n")
    return 0


def _markdown_table(rows, max_n: int) -> str:
    cell = {(d.k, d.n): d.degree for d in rows}
    lines = ["| k \\ n | " + " | ".join(str(n) for n in range(1, max_n + 1)) + " |",
             "|---" * (max_n + 1) + "|"]
    for k in range(1, max_n + 1):
        vals = [str(cell[k, n]) if n >= k else "*" for n in range(1, max_n + 1)]
        lines.append(f"| {k} | " + " | ".join(vals) + " |")
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    rows = degree_table(args.max_n)
    if args.format == "markdown":
        out.write(_markdown_table(rows, args.max_n))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "n", "degree", "regime"])
        for d in rows:
            w.writerow([d.k, d.n, d.degree, d.regime])
        out.write(buf.getvalue())
    else:
        result = [{"k": d.k, "n": d.n, "degree": d.degree, "regime": d.regime} for d in rows]
        out.write(dumps(record("table", {"max_n": args.max_n}, result)) + "\n")
    return 0


def cmd_volume(args, out) -> int:
    vf = vol_closed(args.k, args.n)
    if args.n == args.k:
        raise DomainError(f"volume needs k+1 <= n <= 2k-1, got k={args.k}, n={args.n}")
    expanded = str(vf.poly()) if vf.rank <= EXPAND_MAX_RANK else None
    value = vf.value(args.at) if args.at is not None else None
    if args.format == "json":
        result = {"formula": str(vf), "scalar": vf.scalar, "omega": list(vf.omega),
                  "variables": list(lam_vars(vf.rank)), "expanded": expanded}
        if value is not None:
            result["at"] = list(args.at)
            result["value"] = value
        out.write(dumps(record("volume", {"k": args.k, "n": args.n}, result)) + "\n")
        return 0
    out.write(f"vol GT^SO({args.n})_SO({args.n - args.k}) = {vf}\n")
    if expanded is not None:
        out.write(f"expanded: {expanded}\n")
    if value is not None:
        out.write(f"value at ({','.join(map(str, args.at))}): {value}\n")
    return 0


def cmd_gt_count(args, out) -> int:
    count = count_invariants(args.n, args.lam, args.m)
    fillings = list(enumerate_fillings(args.n, args.lam, args.m)) if args.enumerate else None
    if args.format == "json":
        result = {"count": count}
        if fillings is not None:
            result["fillings"] = [[list(row) for row in f.labels] for f in fillings]
        out.write(dumps(record("gt-count", {"n": args.n, "lambda": list(args.lam), "m": args.m},
                               result)) + "\n")
        return 0
    out.write(f"dim [V_({','.join(map(str, args.lam))})]^SO({args.m}) = {count}\n")
    for i, f in enumerate(fillings or []):
        out.write(f"\nfilling {i + 1}:\n{f}\n")
    return 0


def cmd_verify(args, out) -> int:
    results = run_checks(args.level)
    for r in results:
        out.write(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail}\n")
    failed = sum(not r.ok for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stiefeldeg",
                                description="Exact degrees of Stiefel varieties and related counts.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("degree", help="degree of St(k, n)")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--method", choices=("auto", "determinant", "paths", "integral"), default="auto")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.set_defaults(func=cmd_degree)

    t = sub.add_parser("table", help="triangular table of degrees for n <= max-n")
    t.add_argument("--max-n", type=positive_int, required=True)
    t.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("volume", help="volume polynomial of the GT polytope")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--at", type=rational_list, help="comma-separated weight, e.g. 3,2,1")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_volume)

    g = sub.add_parser("gt-count", help="dimension of SO(m)-invariants in V_lambda of SO(n)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--lambda", dest="lam", type=int_list, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--enumerate", action="store_true", help="also list the fillings")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=cmd_gt_count)

    c = sub.add_parser("verify", help="run the self-checks")
    c.add_argument("--level", choices=("fast", "full"), default="fast")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)  # exits 2 on usage errors
    try:
        return args.func(args, out)
    except (DomainError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
