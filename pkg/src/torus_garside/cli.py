"""Command-line interface: ``torus-garside <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import garside as gs
from .dihedral import (
    DihedralParams,
    build_dihedral,
    build_dihedral_structure,
    g13_presentation,
    verify_dihedral_garside,
    verify_dihedral_isomorphism,
)
from .export import lattice_dot, lattice_json
from .oracle import cancellativity_audit, default_radius, enumerate_ball, oracle_cross_check
from .params import compute_params, coprime_pairs
from .presentations import PresentationVariant, build_presentation, opposite_right_oriented
from .reversing import ComplementTable, certify, cube_check
from .verification import (
    ALL_CHECKS,
    SWEEP_CHECKS,
    SweepSpec,
    parse_checks,
    run_sweep,
    to_json,
    verify_pair,
)


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _params(args):
    n, m = args.n, args.m
    if n is None or m is None:
        raise UsageError("--n and --m are required")
    if getattr(args, "swap", False) and m < n:
        n, m = m, n
    return compute_params(n, m)


# -- commands --------------------------------------------------------------


def cmd_params(args) -> int:
    p = _params(args)
    d = p.to_dict()
    lines = [f"n={p.n} m={p.m} q={p.q} r={p.r}", "i  k  D"]
    lines += [f"{i:<2} {p.k_of(i):<2} {p.D(i)}" for i in range(1, p.n + 1)]
    lines.append("B(i,j): " + ", ".join(f"{k}={v}" for k, v in d["B"].items()))
    _emit(args, d, "\n".join(lines))
    return 0


def _presentation_text(pres) -> str:
    return "\n".join(pres.format(r.lhs) + " = " + pres.format(r.rhs) for r in pres.relations)


def cmd_present(args) -> int:
    p = _params(args)
    pres = build_presentation(p, args.variant)
    _emit(args, pres.to_dict(), _presentation_text(pres))
    return 0


class _Context:
    """A Garside structure plus the word syntax it is queried in."""

    def __init__(self, g: gs.GarsideStructure, names):
        self.g, self.names = g, names

    def parse(self, text: str):
        return self.g.presentation.parse(text)

    def fmt(self, w) -> str:
        return self.g.presentation.format(w)


def _torus_context(args) -> _Context:
    g = gs.build_structure(_params(args))
    return _Context(g, g.presentation.names)


def cmd_equal(args) -> int:
    ctx = _torus_context(args)
    u, v = (ctx.parse(w) for w in args.words)
    same = ctx.g.equal(u, v)
    _emit(args, {"equal": same}, "true" if same else "false")
    return 0


def cmd_divides(args) -> int:
    ctx = _torus_context(args)
    u, w = (ctx.parse(x) for x in args.words)
    if args.side == "left":
        ok = ctx.g.left_divides(u, w)
        quot = ctx.g.left_quotient(u, w) if ok else None
    else:
        ok = ctx.g.right_divides(u, w)
        quot = ctx.g.right_quotient(w, u) if ok else None
    payload = {"divides": ok, "quotient": None if quot is None else ctx.fmt(quot)}
    text = "true" if not ok else f"true (quotient {ctx.fmt(quot)})"
    _emit(args, payload, text if ok else "false")
    return 0


def _fold(args, op) -> int:
    ctx = _torus_context(args)
    words = [ctx.parse(w) for w in args.words]
    acc = words[0]
    for w in words[1:]:
        acc = op(ctx.g, args.side, acc, w)
    if len(words) == 1:
        acc = gs.canonical_word(ctx.g, acc)
    _emit(args, {"result": ctx.fmt(acc), "letters": list(acc)}, ctx.fmt(acc))
    return 0


def cmd_lcm(args) -> int:
    return _fold(args, gs.lcm)


def cmd_gcd(args) -> int:
    return _fold(args, gs.gcd)


def cmd_nf(args) -> int:
    ctx = _torus_context(args)
    nf = gs.normal_form(ctx.g, ctx.parse(args.word))
    factors = [ctx.fmt(s) for s in nf]
    _emit(args, {"normal_form": factors}, " | ".join(factors) if factors else "1")
    return 0


def cmd_simples(args) -> int:
    ctx = _torus_context(args)
    items = [ctx.fmt(s) for s in ctx.g.simples]
    _emit(args, {"count": len(items), "simples": items}, "\n".join(items))
    return 0


def cmd_cube_check(args) -> int:
    p = _params(args)
    if args.table == "theta":
        pres = build_presentation(p, PresentationVariant.LEFT_COMPLEMENTED)
    elif args.table == "eta":
        pres = opposite_right_oriented(p)
    else:
        pres = build_presentation(p, PresentationVariant.PRACTICAL)
    t = ComplementTable.from_presentation(pres, scale=p.n * p.m)
    if args.triple:
        a, b, c = (pres.parse(x) for x in args.triple)
        res = cube_check(t, a, b, c, sharp=not args.lax)
        payload = {
            "status": res.status,
            "lhs": None if res.lhs is None else pres.format(res.lhs),
            "rhs": None if res.rhs is None else pres.format(res.rhs),
        }
        _emit(args, payload, f"{res.status}: {payload['lhs']} vs {payload['rhs']}")
        return 0 if res.ok else 1
    ok = certify(t)
    failures = [
        {
            "triple": [pres.format(x) for x in f.triple],
            "lhs": None if f.lhs is None else pres.format(f.lhs),
            "rhs": None if f.rhs is None else pres.format(f.rhs),
        }
        for f in t.cube_failures
        if not isinstance(f, str)
    ]
    text = "pass" if ok else "fail\n" + "\n".join(
        f"{' '.join(x['triple'])}: {x['lhs']} vs {x['rhs']}" for x in failures
    )
    _emit(args, {"ok": ok, "failures": failures}, text)
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    p = _params(args)
    pres = build_presentation(p, PresentationVariant.PRACTICAL)
    radius = args.max_lambda if args.max_lambda is not None else default_radius(pres, p.n * p.m)
    ball = enumerate_ball(pres, radius)
    if args.check == "cancel":
        rep = {"cancel": cancellativity_audit(ball)}
    else:
        full = oracle_cross_check(ball, gs.build_structure(p), sample_budget=args.samples)
        wanted = ["equal", "cancel", "lcm", "gcd", "simples"] if args.check == "all" else [args.check]
        rep = {k: full[k] for k in wanted}
    rep["ok"] = all(v["ok"] for v in rep.values())
    rep["radius"] = radius
    rep["strata"] = [list(x) for x in ball.stratum_counts()]
    text = "\n".join(f"{k}: {'pass' if v['ok'] else 'FAIL'}" for k, v in rep.items()
                     if isinstance(v, dict))
    _emit(args, rep, f"radius {radius}\n{text}")
    return 0 if rep["ok"] else 1


def cmd_verify(args) -> int:
    if args.checks is None:
        checks = SWEEP_CHECKS if args.sweep else ALL_CHECKS
    else:
        checks = parse_checks(args.checks)
    if args.iso and "iso" not in checks:
        checks = checks + ("iso",)
    if args.sweep:
        pairs = tuple(coprime_pairs(args.n_max, args.m_max))
        report = run_sweep(SweepSpec(pairs=pairs, checks=checks, max_lambda=args.max_lambda),
                           jobs=args.jobs)
        rows = [f"({r['n']},{r['m']}): {'pass' if r['ok'] else 'FAIL'}" for r in report["pairs"]]
    else:
        p = _params(args)
        report = verify_pair(p.n, p.m, checks, args.max_lambda)
        rows = [f"{c}: {'pass' if report[c]['ok'] else 'FAIL'}" for c in checks]
    if args.json:
        print(to_json(report))
    else:
        print("\n".join(rows))
    return 0 if report["ok"] else 1


def _dihedral_params(args) -> DihedralParams:
    if args.preset == "g13":
        return DihedralParams(1)
    if args.n is None:
        raise UsageError("dihedral needs --n or --preset g13")
    return DihedralParams(args.n)


def cmd_dihedral(args) -> int:
    d = _dihedral_params(args)
    action = args.action
    if action == "present":
        pres = g13_presentation() if args.preset == "g13" else build_dihedral(d, args.extended)
        _emit(args, pres.to_dict(), _presentation_text(pres))
        return 0
    if action == "verify":
        rep = {
            "garside": verify_dihedral_garside(d, oracle=not args.no_oracle),
            "iso": verify_dihedral_isomorphism(d),
        }
        rep["ok"] = rep["garside"]["ok"] and rep["iso"]["ok"]
        text = "\n".join(f"{k}: {'pass' if v['ok'] else 'FAIL'}" for k, v in rep.items()
                         if isinstance(v, dict))
        if args.json:
            print(to_json(rep))
        else:
            print(text)
        return 0 if rep["ok"] else 1
    g = build_dihedral_structure(d)
    if action == "simples":
        items = [g.presentation.format(s) for s in g.simples]
        _emit(args, {"count": len(items), "simples": items}, "\n".join(items))
        return 0
    # export
    sys.stdout.write(lattice_dot(g, args.side) if args.format == "dot" else lattice_json(g, args.side))
    return 0


def cmd_export(args) -> int:
    g = gs.build_structure(_params(args))
    out = lattice_dot(g, args.side) if args.dot or not args.json_export else lattice_json(g, args.side)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


# -- parser ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--n", type=int, help="number of generators (n >= 2)")
    pair.add_argument("--m", type=int, help="second torus parameter (m > n, coprime)")

    parser = _Parser(prog="torus-garside", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("params", parents=[common, pair], help="q, r, k, D and B tables")
    s.add_argument("--swap", action="store_true", help="swap n and m when m < n")
    s.set_defaults(func=cmd_params)

    s = sub.add_parser("present", parents=[common, pair], help="print a presentation")
    s.add_argument("--variant", default="practical", choices=[v.value for v in PresentationVariant])
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("equal", parents=[common, pair], help="decide equality of two words")
    s.add_argument("words", nargs=2, metavar="WORD")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("divides", parents=[common, pair], help="does U divide W?")
    s.add_argument("--side", choices=["left", "right"], default="left")
    s.add_argument("words", nargs=2, metavar="WORD", help="U then W")
    s.set_defaults(func=cmd_divides)

    for name, func in (("lcm", cmd_lcm), ("gcd", cmd_gcd)):
        s = sub.add_parser(name, parents=[common, pair], help=f"{name} of one or more words")
        s.add_argument("--side", choices=["left", "right"], default="right" if name == "lcm" else "left")
        s.add_argument("words", nargs="+", metavar="WORD")
        s.set_defaults(func=func)

    s = sub.add_parser("nf", parents=[common, pair], help="greedy normal form")
    s.add_argument("word")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("simples", parents=[common, pair], help="list the divisors of Delta")
    s.set_defaults(func=cmd_simples)

    s = sub.add_parser("cube-check", parents=[common, pair], help="cube condition on a table")
    s.add_argument("--table", choices=["theta", "eta", "practical"], default="theta")
    s.add_argument("--triple", nargs=3, metavar="WORD")
    s.add_argument("--lax", action="store_true", help="compare up to the relations")
    s.set_defaults(func=cmd_cube_check)

    s = sub.add_parser("oracle", parents=[common, pair], help="brute-force ball cross-check")
    s.add_argument("--max-lambda", type=int)
    s.add_argument("--check", choices=["equal", "cancel", "lcm", "gcd", "simples", "all"],
                   default="all")
    s.add_argument("--samples", type=int, default=100_000, help="sampled equality pairs")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", parents=[common, pair], help="run verification checks")
    s.add_argument(
        "--checks",
        help=f"'all' or comma list of {', '.join(ALL_CHECKS)} (default: all; sweeps skip oracle)",
    )
    s.add_argument("--sweep", action="store_true", help="all coprime pairs up to --n-max/--m-max")
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--m-max", type=int, default=13)
    s.add_argument("--iso", action="store_true", help="include the isomorphism checks")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--max-lambda", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("dihedral", parents=[common], help="even dihedral monoids")
    s.add_argument("action", nargs="?", default="verify",
                   choices=["present", "verify", "simples", "export"])
    s.add_argument("--n", type=int)
    s.add_argument("--preset", choices=["g13"])
    s.add_argument("--extended", action="store_true")
    s.add_argument("--no-oracle", action="store_true")
    s.add_argument("--side", choices=["left", "right"], default="left")
    s.add_argument("--format", choices=["dot", "json"], default="dot")
    s.set_defaults(func=cmd_dihedral)

    s = sub.add_parser("export", parents=[pair], help="lattice of simples as DOT or JSON")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Hasse diagram (default)")
    fmt.add_argument("--json", dest="json_export", action="store_true", help="meet/join tables")
    s.add_argument("--side", choices=["left", "right"], default="left")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export, json=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
