"""Command-line driver.

Exit status: 0 on success, 1 when evaluation raises the GC exception or a
verification fails, 2 on unreadable input (syntax or type errors).
"""

from __future__ import annotations

import argparse
import json
import sys

from fracpi import circuits
from fracpi.combinators import invert
from fracpi.errors import PiError
from fracpi.extraction import ext_comb
from fracpi.frac import eval_d
from fracpi.model import enumerate_values, has_type, show_ty, show_val, size
from fracpi.syntax import parse, parse_val, pretty


def _load(path):
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as f:
        return parse(f.read())


def truth_table(c):
    return [(v, eval_d(c, v)) for v in enumerate_values(c.dom)]


def cmd_check(args):
    c = _load(args.file)
    print(f"dom: {show_ty(c.dom)}")
    print(f"cod: {show_ty(c.cod)}")
    return 0


def cmd_run(args):
    c = _load(args.file)
    v = parse_val(args.input)
    if not has_type(v, c.dom):
        print(f"error: {show_val(v)} is not a value of {show_ty(c.dom)}",
              file=sys.stderr)
        return 2
    out = eval_d(c, v)
    if out is None:
        print("exception")
        return 1
    print(show_val(out))
    return 0


def cmd_invert(args):
    print(pretty(invert(_load(args.file))))
    return 0


def cmd_truth_table(args):
    rows = truth_table(_load(args.file))
    if args.json:
        print(json.dumps([
            {"in": show_val(v), "out": None if out is None else show_val(out)}
            for v, out in rows], indent=2))
    else:
        for v, out in rows:
            print(f"{show_val(v)} -> {'exception' if out is None else show_val(out)}")
    return 0


def cmd_verify(args):
    c = _load(args.file)
    inv = invert(c)
    rows = truth_table(c)
    failures = 0
    for v, out in rows:
        if out is None:
            problem = "exception"
        elif eval_d(inv, out) != v:
            problem = "inverse does not restore the input"
        else:
            problem = None
        failures += problem is not None
        if problem:
            print(f"FAIL {show_val(v)}: {problem}")
    outs = {out for _, out in rows if out is not None}
    bijective = (size(c.dom) == size(c.cod) and failures == 0
                 and outs == set(enumerate_values(c.cod)))
    print(f"round trip: {len(rows) - failures}/{len(rows)} rows pass")
    print(f"bijective: {'yes' if bijective else 'no'}")
    return 0 if bijective else 1


def cmd_list(args):
    for nc in circuits.gallery():
        print(f"{nc.name:16} {show_ty(nc.dynamic.dom)} <-> "
              f"{show_ty(nc.dynamic.cod)}  {nc.description}")
    return 0


def cmd_example(args):
    try:
        nc = circuits.by_name(args.name)
    except KeyError:
        names = ", ".join(c.name for c in circuits.gallery())
        print(f"error: no circuit named {args.name!r} (try: {names})",
              file=sys.stderr)
        return 2
    if args.verify:
        report = circuits.verify(nc)
        for row in report.rows:
            out = "exception" if row.output is None else show_val(row.output)
            status = "ok  " if row.ok else "FAIL"
            print(f"{status} {show_val(row.input)} -> {out}"
                  + "".join(f"\n     {f}" for f in row.failures))
        for f in report.failures:
            print(f"FAIL {f}")
        print(f"{nc.name}: {report.passed}/{len(report.rows)} rows pass")
        return 0 if report.ok else 1
    if args.extract:
        if nc.pointed is None:
            print(f"error: {nc.name} has no pointed version", file=sys.stderr)
            return 2
        first = enumerate_values(nc.dynamic.dom)[0]
        print(pretty(ext_comb(nc.pointed(first))))
        return 0
    print(pretty(nc.dynamic))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="fracpi",
        description="Reversible combinators with fractional types.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="print the inferred domain and codomain")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("run", help="evaluate a program on one input")
    s.add_argument("file")
    s.add_argument("--input", required=True, metavar="VAL")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("invert", help="print the inverse program")
    s.add_argument("file")
    s.set_defaults(func=cmd_invert)

    s = sub.add_parser("truth-table", help="evaluate on every input")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_truth_table)

    s = sub.add_parser("verify", help="check bijectivity and round trips")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("list", help="list the named example circuits")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("example", help="show or verify a named circuit")
    s.add_argument("name")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--extract", action="store_true",
                   help="print the program extracted from the pointed version")
    g.add_argument("--verify", action="store_true",
                   help="run the full verification suite")
    s.set_defaults(func=cmd_example)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PiError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
