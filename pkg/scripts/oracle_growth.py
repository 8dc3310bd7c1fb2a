"""Stratum sizes of the word ball and the radius the budget allows, per pair.

    python scripts/oracle_growth.py --n-max 4 --m-max 7
"""

from __future__ import annotations

import argparse

from torus_garside.dihedral import DihedralParams, build_dihedral
from torus_garside.oracle import configured_budget, default_radius, stratum_sizes
from torus_garside.params import compute_params, coprime_pairs
from torus_garside.presentations import build_presentation


def row(label: str, pres, lam_delta: int, budget: int) -> str:
    radius = default_radius(pres, lam_delta, budget)
    sizes = stratum_sizes(pres, lam_delta)
    return f"{label:<14} lambda(Delta)={lam_delta:<3} radius={radius:<3} words at Delta={sizes[lam_delta]}"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--m-max", type=int, default=7)
    ap.add_argument("--dihedral-max", type=int, default=6)
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args(argv)
    budget = args.budget or configured_budget()
    print(f"budget {budget} words per stratum")
    for n, m in coprime_pairs(args.n_max, args.m_max):
        pres = build_presentation(compute_params(n, m), "practical")
        print(row(f"torus ({n},{m})", pres, n * m, budget))
    for n in range(1, args.dihedral_max + 1):
        print(row(f"dihedral n={n}", build_dihedral(DihedralParams(n)), 2 * n + 4, budget))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
