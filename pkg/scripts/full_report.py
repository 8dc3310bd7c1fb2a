"""Write every verification report and lattice export into one directory.

Two runs with the same arguments must produce byte-identical files; the
acceptance suite checks this under different hash seeds.

    python scripts/full_report.py --out reports/
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from torus_garside import garside as gs
from torus_garside.dihedral import (
    DihedralParams,
    build_dihedral_structure,
    verify_dihedral_garside,
    verify_dihedral_isomorphism,
)
from torus_garside.export import lattice_dot, lattice_json
from torus_garside.params import compute_params, coprime_pairs
from torus_garside.verification import SweepSpec, run_sweep, to_json, verify_pair

ORACLE_PAIRS = ((2, 3), (2, 5), (3, 4), (3, 5), (4, 5))


def write(out: Path, name: str, text: str) -> None:
    path = out / name
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, required=True)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--m-max", type=int, default=13)
    ap.add_argument("--export-n-max", type=int, default=5, help="lattice exports for n up to this")
    ap.add_argument("--dihedral-max", type=int, default=6)
    ap.add_argument("--oracle-dihedral-max", type=int, default=3)
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args(argv)
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    ok = True

    pairs = coprime_pairs(args.n_max, args.m_max)
    sweep = run_sweep(SweepSpec(pairs=tuple(pairs)))
    write(out, "sweep.json", to_json(sweep))
    ok &= sweep["ok"]

    if not args.no_oracle:
        reports = [verify_pair(n, m, ("oracle",), n * m) for n, m in ORACLE_PAIRS]
        write(out, "oracle.json", to_json({"pairs": reports}))
        ok &= all(r["ok"] for r in reports)

    for n, m in pairs:
        if n > args.export_n_max:
            continue
        g = gs.build_structure(compute_params(n, m))
        for side in ("left", "right"):
            write(out, f"lattices/torus_{n}_{m}_{side}.dot", lattice_dot(g, side))
            write(out, f"lattices/torus_{n}_{m}_{side}.json", lattice_json(g, side))

    dihedral = []
    for n in range(1, args.dihedral_max + 1):
        d = DihedralParams(n)
        oracle = not args.no_oracle and n <= args.oracle_dihedral_max
        rep = {"garside": verify_dihedral_garside(d, oracle=oracle),
               "iso": verify_dihedral_isomorphism(d)}
        ok &= rep["garside"]["ok"] and rep["iso"]["ok"]
        dihedral.append(rep)
        g = build_dihedral_structure(d)
        for side in ("left", "right"):
            write(out, f"lattices/dihedral_{n}_{side}.dot", lattice_dot(g, side))
    write(out, "dihedral.json", to_json({"dihedral": dihedral}))

    summary = {"ok": bool(ok), "files": sorted(str(p.relative_to(out)) for p in out.rglob("*")
                                               if p.is_file() and p.name != "summary.json")}
    write(out, "summary.json", json.dumps(summary, sort_keys=True, indent=2))
    print(f"{'pass' if ok else 'FAIL'}: {len(summary['files'])} files in {out}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
