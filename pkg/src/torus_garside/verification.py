"""Per-pair verification checks and sweeps over many (n, m).

Reports are plain dicts with sorted, timing-free content so that two runs
serialize to identical JSON.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import garside as gs
from .groups import verify_torus_isomorphism
from .oracle import default_radius, enumerate_ball, oracle_cross_check
from .params import TorusParams, compute_params, coprime_pairs, verify_defect_identities
from .presentations import (
    PresentationVariant,
    build_presentation,
    eta_closed_form,
    eta_family_inputs,
    eta_family_words,
    opposite_right_oriented,
)
from .reversing import ComplementTable, certify, extend_complement

ALL_CHECKS = ("defects", "cube", "eta-forms", "lcm", "gcd", "axioms", "iso", "oracle")
# The oracle ball grows exponentially; sweeps leave it out unless asked.
SWEEP_CHECKS = tuple(c for c in ALL_CHECKS if c != "oracle")


@dataclass(frozen=True)
class SweepSpec:
    pairs: tuple[tuple[int, int], ...] = field(default_factory=lambda: tuple(coprime_pairs(6, 13)))
    checks: tuple[str, ...] = SWEEP_CHECKS
    max_lambda: int | None = None

    def __post_init__(self):
        for n, m in self.pairs:
            compute_params(n, m)  # raises on bad pairs
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


def parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return ALL_CHECKS
    items = tuple(c.strip() for c in text.split(",") if c.strip())
    unknown = set(items) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)} (choose from {', '.join(ALL_CHECKS)})")
    return items


def tables(p: TorusParams) -> tuple[ComplementTable, ComplementTable]:
    lam = p.n * p.m
    right = ComplementTable.from_presentation(
        build_presentation(p, PresentationVariant.LEFT_COMPLEMENTED), scale=lam
    )
    left = ComplementTable.from_presentation(opposite_right_oriented(p), scale=lam)
    return right, left


# --------------------------------------------------------------------------
# individual checks


def check_cube(p: TorusParams) -> dict:
    right, left = tables(p)
    out = {}
    for name, t in (("theta", right), ("eta", left)):
        certify(t)
        out[name] = {
            "ok": bool(t.certified),
            "triples": p.n * (p.n - 1) * (p.n - 2),
            "failures": [repr(f) for f in t.cube_failures][:10],
        }
    out["ok"] = all(v["ok"] for v in out.values())
    return out


def check_eta_forms(p: TorusParams) -> dict:
    _, left = tables(p)
    mismatches = []
    count = 0
    for family, i, j, ell in eta_family_inputs(p):
        u, v = eta_family_words(p, family, i, j, ell)
        generic = extend_complement(left, u, v)
        closed = eta_closed_form(p, family, i, j, ell)
        count += 1
        if generic != closed:
            mismatches.append(
                {"family": family, "i": i, "j": j, "shift": ell,
                 "generic": None if generic is None else list(generic), "closed": list(closed)}
            )
    return {"ok": not mismatches, "inputs": count, "mismatches": mismatches[:10]}


def left_lcm_of_atoms_formula(p: TorusParams) -> tuple[int, ...]:
    n, q, r = p.n, p.q, p.r
    if p.D(1) == 1:
        return (n - 1,) + (n,) * (q * (n - 2) + r - 1)
    return (n,) * (p.m - q)


def check_lcm(p: TorusParams, g: gs.GarsideStructure) -> dict:
    atoms = [(a,) for a in range(1, p.n + 1)]
    right = gs.lcm_all(g, "right", atoms)
    left = gs.lcm_all(g, "left", atoms)
    right_expected = (p.n,) * (p.m - p.q)
    left_expected = left_lcm_of_atoms_formula(p)
    differ = not g.equal(right, left) if g.length(right) == g.length(left) else True
    # pairwise: the right-lcm of two atoms is rho_i theta(rho_i, rho_j)
    pair_fail = []
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            via_table = g.right_table.reverse((i,), (j,))
            if via_table is None or not g.equal(gs.lcm(g, "right", (i,), (j,)), (i,) + via_table[0]):
                pair_fail.append([i, j])
    res = {
        "right": list(right),
        "left": list(left),
        "right_ok": g.equal(right, right_expected),
        "left_ok": g.equal(left, left_expected),
        "differ": differ,
        "differ_ok": differ == (2 * p.r > p.n),
        "pairs_ok": not pair_fail,
    }
    res["ok"] = res["right_ok"] and res["left_ok"] and res["differ_ok"] and res["pairs_ok"]
    return res


def check_gcd(g: gs.GarsideStructure, samples: int = 60, seed: int = 0) -> dict:
    """Element gcd (atom peeling) against the lattice meet of simples."""
    rng = random.Random(seed)
    size = len(g.simples)
    failures = []
    for _ in range(samples):
        s, t = rng.randrange(size), rng.randrange(size)
        for side in ("left", "right"):
            got = gs.gcd(g, side, g.simples[s], g.simples[t])
            want = g.simples[gs.simple_meet(g, side, s, t)]
            if got != want:
                failures.append([side, s, t])
    return {"ok": not failures, "samples": samples, "failures": failures[:10]}


def check_axioms(p: TorusParams, g: gs.GarsideStructure) -> dict:
    rep = gs.check_garside_axioms(g)
    bad = []
    for i in range(1, p.n + 1):
        try:
            gs.complement_of_atom(g, i)
        except RuntimeError:
            bad.append(i)
    rep["atom_complements"] = {"ok": not bad, "failures": bad}
    rep["ok"] = rep["ok"] and not bad
    return rep


def check_oracle(p: TorusParams, g: gs.GarsideStructure, max_lambda: int | None = None,
                 sample_budget: int = 100_000) -> dict:
    pres = build_presentation(p, PresentationVariant.PRACTICAL)
    radius = max_lambda if max_lambda is not None else default_radius(pres, p.n * p.m)
    ball = enumerate_ball(pres, radius)
    rep = oracle_cross_check(ball, g, sample_budget=sample_budget)
    rep["radius"] = radius
    return rep


def verify_pair(n: int, m: int, checks=SWEEP_CHECKS, max_lambda: int | None = None) -> dict:
    p = compute_params(n, m)
    report: dict = {"n": n, "m": m}
    g = None
    needs_structure = {"lcm", "gcd", "axioms", "oracle"}
    if needs_structure & set(checks):
        g = gs.build_structure(p)
        report["simples"] = len(g.simples)
    for c in ALL_CHECKS:
        if c not in checks:
            continue
        if c == "defects":
            d = verify_defect_identities(p)
            report[c] = {"ok": not d["violations"], **d}
        elif c == "cube":
            report[c] = check_cube(p)
        elif c == "eta-forms":
            report[c] = check_eta_forms(p)
        elif c == "lcm":
            report[c] = check_lcm(p, g)
        elif c == "gcd":
            report[c] = check_gcd(g)
        elif c == "axioms":
            report[c] = check_axioms(p, g)
        elif c == "iso":
            report[c] = verify_torus_isomorphism(p)
        elif c == "oracle":
            report[c] = check_oracle(p, g, max_lambda)
    report["ok"] = all(report[c]["ok"] for c in checks)
    return report


def _run_one(args):
    n, m, checks, max_lambda = args
    return verify_pair(n, m, checks, max_lambda)


def run_sweep(spec: SweepSpec, jobs: int = 1) -> dict:
    work = [(n, m, spec.checks, spec.max_lambda) for n, m in sorted(spec.pairs)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, work))
    else:
        results = [_run_one(w) for w in work]
    results.sort(key=lambda r: (r["n"], r["m"]))
    return {
        "checks": list(spec.checks),
        "pairs": results,
        "ok": all(r["ok"] for r in results),
    }


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)
