"""Command-line front end: ``hyperdist <command> ...``.

Every command prints a human-readable report, or a single JSON object with
``--json``. The exit status is 0 exactly when every verification the command
performed passed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import (
    ACTIVE, load_corpus, run_all, select, verify,
)
from .errors import HyperdistError
from .expr import Hyp, to_text
from .identity import Identity
from .numerics import Precision, eval_side
from .params import ParamList, parse_param
from .parse import parse_expr, parse_series
from .theorems import match_closed_form, sum_dist_rhs
from .transforms import DistSpec, dist, init, pfd, stir

JSON_SCHEMA = 1


def _params(text: str) -> ParamList:
    text = text.strip()
    if not text:
        return ParamList()
    return ParamList(parse_param(t) for t in text.split(","))


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        payload = {"schema": JSON_SCHEMA, "command": args.command, **payload}
        print(json.dumps(payload, indent=1, sort_keys=False))
    else:
        print("\n".join(lines))


def _report_lines(r) -> list:
    status = "PASS" if r.passed else "FAIL"
    lines = [f"{status} {r.name}"]
    if r.error:
        lines.append(f"  error: {r.error}")
    else:
        lines += [f"  lhs  = {r.lhs}", f"  rhs  = {r.rhs}",
                  f"  diff = {r.abs_diff:.3e} (tol 1e{r.tolerance}, {r.rigor})"]
    return lines


def _check(ident: Identity, args):
    """Verify a concrete identity; symbolic ones are skipped (None)."""
    if not ident.is_concrete or args.no_check:
        return None
    return verify(ident, Precision(args.prec), args.tol)


def _identity_command(args, ident: Identity) -> int:
    report = _check(ident, args)
    payload = {"identity": ident.to_json(), "text": str(ident),
               "verification": report.to_json() if report else None}
    lines = [str(ident)]
    if "theorems" in ident.notes:
        lines += [f"  summed {t['series']} by {t['theorem']}" for t in ident.notes["theorems"]]
    if report:
        lines += _report_lines(report)
    _emit(args, payload, lines)
    return 0 if report is None or report.passed else 1


# ------------------------------------------------------------------ commands

def cmd_eval(args) -> int:
    e = parse_expr(args.expr)
    v = eval_side(e, "expr", None, Precision(args.prec))
    text = v.digits_text(args.prec)
    _emit(args, {"expr": to_text(e), "value": text, "err": f"{v.err:.3e}", "rigor": v.rigor},
          [text, f"  err {v.err:.3e} ({v.rigor})"])
    return 0


def cmd_dist(args) -> int:
    spec = DistSpec(args.n, args.m, parse_expr(args.z), _params(args.A), _params(args.B))
    ident = dist(spec, raw=args.raw)
    if args.sum:
        ident = sum_dist_rhs(ident)
    return _identity_command(args, ident)


def cmd_rewrite(args) -> int:
    s = parse_series(args.series)
    if args.kind == "stir":
        ident = stir(s, args.i, args.j)
    elif args.kind == "init":
        ident = init(s, args.i, args.j)
    else:
        pairs = []
        for p in args.pairs:
            i, _, j = p.partition(":")
            pairs.append((int(i), int(j)))
        ident = pfd(s, pairs)
    return _identity_command(args, ident)


def cmd_sum(args) -> int:
    s = parse_series(args.series)
    matches = match_closed_form(s)
    results, lines, ok = [], [], bool(matches)
    for m in matches:
        label = m.theorem.value + m.variant
        report = None if args.no_check else verify(
            Identity(label, Hyp(s), m.closed_form), Precision(args.prec), args.tol)
        ok = ok and (report is None or report.passed)
        results.append({"theorem": label, "binding": m.binding_text(),
                        "closed_form": to_text(m.closed_form),
                        "verification": report.to_json() if report else None})
        lines.append(f"{label} {m.binding_text()}: {to_text(m.closed_form)}")
        if report:
            lines += _report_lines(report)
    if not matches:
        lines.append(f"no closed form found for {s}")
    _emit(args, {"series": str(s), "matches": results}, lines)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    ident = Identity("verify", parse_expr(args.lhs), parse_expr(args.rhs))
    report = verify(ident, Precision(args.prec), args.tol)
    _emit(args, {"verification": report.to_json()}, _report_lines(report))
    return 0 if report.passed else 1


def cmd_corpus_run(args) -> int:
    entries = select(load_corpus(args.corpus), args.tag, args.name)
    summary = run_all(entries, Precision(args.prec), args.jobs, args.seed, args.tol_override)
    text = summary.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        for r in summary.results:
            status = "PASS" if r.passed else ("DISPUTED" if r.status != ACTIVE else "FAIL")
            print(f"{status:8} {r.name} ({len(r.reports)} checks)")
            for rep in r.reports:
                if not rep.passed:
                    print(f"    {rep.binding or ''} diff={rep.abs_diff:.3e} {rep.error or ''}".rstrip())
        c = summary.counts
        print(f"{c['passed']}/{c['entries']} entries passed, {c['checks']} checks, "
              f"{c['disputed']} disputed")
    return 0 if summary.ok else 1


def cmd_corpus_list(args) -> int:
    entries = select(load_corpus(args.corpus), args.tag, args.name)
    rows = [{"name": e.name, "mode": e.verify_mode, "samples": e.samples, "status": e.status,
             "tolerance": e.expected_tolerance, "tags": list(e.class_tags)} for e in entries]
    lines = [f"{r['name']:40} {r['mode']:10} {r['status']:8} {' '.join(r['tags'])}" for r in rows]
    _emit(args, {"entries": rows}, lines)
    return 0


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=40, help="working precision in decimal digits")
    common.add_argument("--tol", type=int, default=None,
                        help="pass when |lhs - rhs| <= 10^TOL (default -15; corpus: per entry)")
    common.add_argument("--seed", type=int, default=0, help="seed for parametric sampling")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="hyperdist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression or series")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dist", parents=[common], help="distribution identity DIST(n,m,z,A,B)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("z")
    p.add_argument("A", help="comma-separated upper parameters")
    p.add_argument("B", help="comma-separated lower parameters")
    p.add_argument("--raw", action="store_true", help="keep the uncancelled left side")
    p.add_argument("--sum", action="store_true", help="sum right-side series by known theorems")
    p.add_argument("--no-check", action="store_true")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("rewrite", help="STIR, INIT or PFD rewrite")
    rw = p.add_subparsers(dest="kind", required=True)
    for kind, what in (("stir", "upper index i, lower index j"),
                       ("init", "index i of the upper 1, lower index j")):
        q = rw.add_parser(kind, parents=[common], help=what)
        q.add_argument("series")
        q.add_argument("i", type=int)
        q.add_argument("j", type=int)
        q.add_argument("--no-check", action="store_true")
    q = rw.add_parser("pfd", parents=[common], help="pairs upper:lower with lower = upper + 1")
    q.add_argument("series")
    q.add_argument("pairs", nargs="+")
    q.add_argument("--no-check", action="store_true")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("sum", parents=[common], help="closed forms from summation theorems")
    p.add_argument("series")
    p.add_argument("--no-check", action="store_true")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify", parents=[common], help="compare two expressions numerically")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="the identity corpus")
    cs = p.add_subparsers(dest="action", required=True)
    for action, func in (("run", cmd_corpus_run), ("list", cmd_corpus_list)):
        q = cs.add_parser(action, parents=[common])
        q.add_argument("--corpus", default=None, help="corpus file (default: shipped or $HYPERDIST_CORPUS)")
        q.add_argument("--tag", action="append", default=[], help="keep entries with this tag")
        q.add_argument("--name", action="append", default=[], help="keep entries with this name")
        if action == "run":
            q.add_argument("--jobs", type=int, default=1, help="worker processes")
            q.add_argument("--out", default=None, help="also write the JSON report here")
        q.set_defaults(func=func)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.tol_override = args.tol
    if args.tol is None:
        args.tol = -15
    try:
        return args.func(args)
    except HyperdistError as exc:
        print(f"hyperdist: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"hyperdist: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
