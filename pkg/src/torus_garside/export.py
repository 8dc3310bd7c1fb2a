"""Deterministic DOT / JSON dumps of the lattice of simples."""

from __future__ import annotations

import json

from . import garside as gs


def _labels(g: gs.GarsideStructure) -> list[str]:
    return [g.presentation.format(s) for s in g.simples]


def lattice_dot(g: gs.GarsideStructure, side: str = "left") -> str:
    labels = _labels(g)
    lines = [f'digraph "{side}_divisibility" {{', "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        lines.append(f'  s{i} [label="{lab}"];')
    for s, t in gs.covers(g, side):
        lines.append(f"  s{s} -> s{t};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dict(g: gs.GarsideStructure, side: str = "left") -> dict:
    meet, join = gs.lattice_tables(g, side)
    return {
        "side": side,
        "delta": g.presentation.format(g.delta),
        "nodes": _labels(g),
        "covers": [list(e) for e in gs.covers(g, side)],
        "meet": meet,
        "join": join,
    }


def lattice_json(g: gs.GarsideStructure, side: str = "left") -> str:
    return json.dumps(lattice_dict(g, side), sort_keys=True) + "\n"
