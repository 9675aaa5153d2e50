"""Command-line front end: ``rootlat <subcommand> ...``.

Reports go to stdout as JSON (or CSV with ``--csv``). Coefficients are
always emitted as decimal strings. Exit status: 0 on success, 1 if any
check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional

from . import acceptance
from . import an_triangulation as tri
from . import coordinator as co
from . import dn_series as dn
from .errors import RootLatError
from .lattices import LatticeFamily, growth_bfs, h_star_from_dilates
from .polyalg import expand_growth


class UsageError(Exception):
    pass


def _strs(values) -> list:
    return [str(v) for v in values]


def _family(kind: str, n: int) -> LatticeFamily:
    try:
        return LatticeFamily(kind, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _report(argv, quantity, coefficients, family=None, checks=None) -> dict:
    rep = {"command": list(argv)}
    if family is not None:
        rep["family"] = family.kind
        rep["n"] = family.n
    rep["quantity"] = quantity
    rep["coefficients"] = coefficients
    rep["checks"] = checks or {}
    return rep


def cmd_h(args, argv):
    fam = _family(args.family, args.n)
    return _report(argv, "h", _strs(co.h_closed(fam.kind, fam.n)), fam)


def cmd_f(args, argv):
    fam = _family(args.family, args.n)
    return _report(argv, "f", _strs(co.f_closed(fam.kind, fam.n)), fam)


def cmd_growth(args, argv):
    fam = _family(args.family, args.n)
    if args.kmax < 0:
        raise UsageError("--kmax must be >= 0")
    series = expand_growth(co.h_closed(fam.kind, fam.n), fam.rank, args.kmax)
    checks = {}
    if args.method == "series":
        values = series
    else:
        values = growth_bfs(fam, args.kmax).s
        if args.method == "both":
            checks["bfs_equals_series"] = "pass" if values == series else "fail"
    return _report(argv, "growth", _strs(values), fam, checks)


def cmd_hstar(args, argv):
    fam = _family(args.family, args.n)
    hstar = h_star_from_dilates(fam)
    ok = hstar == co.h_closed(fam.kind, fam.n)
    return _report(argv, "hstar", _strs(hstar), fam, {"hstar_equals_h_closed": "pass" if ok else "fail"})


def cmd_faces(args, argv):
    if args.family.upper() != "A":
        raise UsageError("faces is only available for family A")
    fam = _family("A", args.n)
    fv = tri.staircase_f_vector(fam.n)
    ok = list(fv.counts) == [co.multinomial(m, m, fam.n - m) for m in range(fam.n + 1)]
    rep = _report(argv, "f_vector", _strs(fv.counts), fam,
                  {"matches_multinomial": "pass" if ok else "fail"})
    if args.dump:
        rep["dumped_faces"] = str(tri.dump_faces(fam.n, args.dump))
    return rep


def cmd_series(args, argv):
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    s = dn.expand(args.name, args.order)
    return _report(argv, args.name, [_strs(s[r]) for r in range(s.order + 1)])


def cmd_verify(args, argv):
    cfg = acceptance.Config(nmax=args.nmax, enum_max=min(8, args.nmax), seed=args.seed)
    start = time.perf_counter()
    results = acceptance.run_all(cfg, report=lambda r: print(r.line(), file=sys.stderr))
    total = time.perf_counter() - start
    checks = {f"{r.number:02d} {r.title}": "pass" if r.passed else "fail" for r in results}
    within = total <= acceptance.TOTAL_TIME_LIMIT
    checks["total runtime within limit"] = "pass" if within else "fail"
    rep = _report(argv, "verify", [], checks=checks)
    rep["failures"] = {f"{r.number:02d}": r.failures for r in results if r.failures}
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", default=argparse.SUPPRESS,
                        help="flatten coefficients to CSV")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="add elapsed_ms to the report")
    p = argparse.ArgumentParser(prog="rootlat", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def fam_args(sp):
        sp.add_argument("family", choices=["A", "C", "D", "a", "c", "d"])
        sp.add_argument("n", type=int)

    sp = sub.add_parser("h", parents=[common], help="closed-form coordinator polynomial")
    fam_args(sp)
    sp.set_defaults(func=cmd_h)

    sp = sub.add_parser("f", parents=[common], help="closed-form boundary f-polynomial")
    fam_args(sp)
    sp.set_defaults(func=cmd_f)

    sp = sub.add_parser("growth", parents=[common], help="growth function S(0..K)")
    fam_args(sp)
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--method", choices=["bfs", "series", "both"], default="both")
    sp.set_defaults(func=cmd_growth)

    sp = sub.add_parser("hstar", parents=[common], help="h* polynomial from dilate counts")
    fam_args(sp)
    sp.set_defaults(func=cmd_hstar)

    sp = sub.add_parser("faces", parents=[common], help="staircase f-vector of the A_n boundary")
    fam_args(sp)
    sp.add_argument("--dump", metavar="PATH")
    sp.set_defaults(func=cmd_faces)

    sp = sub.add_parser("series", parents=[common], help="z-coefficients of a generating function")
    sp.add_argument("name", choices=sorted(dn.GENERATING_FUNCTIONS))
    sp.add_argument("--order", type=int, default=dn.DEFAULT_ORDER)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("verify", parents=[common], help="run every acceptance criterion")
    sp.add_argument("--nmax", type=int, default=12)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return p


def _to_csv(rep: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    coeffs = rep["coefficients"]
    if coeffs and isinstance(coeffs[0], list):
        w.writerow(["z", "x", "coefficient"])
        for r, row in enumerate(coeffs):
            for k, c in enumerate(row):
                w.writerow([r, k, c])
    else:
        w.writerow(["index", "coefficient"])
        for k, c in enumerate(coeffs):
            w.writerow([k, c])
    for name, status in rep["checks"].items():
        w.writerow(["check", name, status])
    if "elapsed_ms" in rep:
        w.writerow(["elapsed_ms", rep["elapsed_ms"]])
    return buf.getvalue()


def _failed(rep: dict) -> bool:
    return any(v != "pass" for v in rep["checks"].values())


def run(argv: Optional[list] = None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    start = time.perf_counter()
    try:
        rep = args.func(args, argv)
    except UsageError as exc:
        print(f"rootlat: error: {exc}", file=sys.stderr)
        return 2
    except RootLatError as exc:
        print(f"rootlat: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "timing", False):
        rep["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    out.write(_to_csv(rep) if getattr(args, "csv", False) else json.dumps(rep, indent=2) + "\n")
    return 1 if _failed(rep) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
