"""Monoids for the even dihedral Artin groups I2(2n+4), and the G13 preset.

Generators are tau_1, tau_2, rho (indices 1, 2, 3; weights 1, 1, 2) with

    tau_1 rho tau_2 = rho^2,   tau_2 rho^n tau_1 = rho^(n+1),

and the extended (right-complemented) form adds
``tau_2 rho^n tau_1 = tau_1 rho tau_2 rho^(n-1)``.  Reversing every relation
gives the same presentation with tau_1 and tau_2 swapped, which supplies the
opposite table.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import garside as gs
from .groups import (
    GroupBackend,
    GroupHom,
    artin_backend,
    artin_dihedral_presentation,
    check_composition,
    free_reduce,
    inverse,
    verify_homomorphism,
)
from .oracle import (
    configured_budget,
    default_radius,
    enumerate_ball,
    oracle_cross_check,
    stratum_sizes,
)
from .reversing import ComplementTable, certify
from .words import Presentation, Variant, Word, make_presentation

T1, T2, RHO = 1, 2, 3
DIHEDRAL_NAMES = ("t1", "t2", "p")
G13_NAMES = ("r1", "r2", "r3")


@dataclass(frozen=True)
class DihedralParams:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1 (got {self.n}); rho is not an atom at n=0")

    @property
    def artin_type(self) -> int:
        return 2 * self.n + 4

    @property
    def delta(self) -> Word:
        return (RHO,) * (self.n + 2)


def _relations(n: int, extended: bool, swap: bool) -> list[tuple[Word, Word]]:
    a, b = (T2, T1) if swap else (T1, T2)
    r = lambda k: (RHO,) * k  # noqa: E731
    rels = [((a, RHO, b), r(2)), ((b,) + r(n) + (a,), r(n + 1))]
    if extended:
        rels.append(((b,) + r(n) + (a,), (a, RHO, b) + r(n - 1)))
    return rels


def build_dihedral(d: DihedralParams, extended: bool = False, names=DIHEDRAL_NAMES) -> Presentation:
    label = f"dihedral n={d.n}" + (" extended" if extended else "")
    return make_presentation(
        3, _relations(d.n, extended, swap=False), (1, 1, 2), Variant.DIHEDRAL_EVEN, names, label
    )


def opposite_dihedral(d: DihedralParams) -> Presentation:
    """The reversed monoid, presented by the tau-swapped extended relations."""
    return make_presentation(
        3,
        _relations(d.n, True, swap=True),
        (1, 1, 2),
        Variant.OPPOSITE,
        DIHEDRAL_NAMES,
        f"dihedral n={d.n} opposite",
    )


def g13_presentation() -> Presentation:
    """The n=1 monoid with rho_1 = tau_1, rho_2 = tau_2, rho_3 = rho."""
    return build_dihedral(DihedralParams(1), extended=False, names=G13_NAMES)


def dihedral_tables(d: DihedralParams) -> tuple[ComplementTable, ComplementTable]:
    lam = 2 * d.n + 4
    right = ComplementTable.from_presentation(build_dihedral(d, extended=True), scale=lam)
    left = ComplementTable.from_presentation(opposite_dihedral(d), scale=lam)
    return right, left


def build_dihedral_structure(d: DihedralParams) -> gs.GarsideStructure:
    right, left = dihedral_tables(d)
    return gs.build_generic(build_dihedral(d), d.delta, right, left, params=d)


def _check_radius(d: DihedralParams, pres: Presentation, budget: int | None) -> tuple[int, int]:
    """Oracle radius: up to lambda(Delta) + 4, clipped by the budget but never below lambda(Delta)."""
    budget = budget or configured_budget()
    lam_delta = 2 * d.n + 4
    radius = min(lam_delta + 4, default_radius(pres, lam_delta, budget))
    if radius < lam_delta:
        radius = lam_delta
        budget = max(budget, stratum_sizes(pres, radius)[radius])
    return radius, budget


def verify_dihedral_garside(
    d: DihedralParams,
    oracle: bool = True,
    budget: int | None = None,
    sample_budget: int = 20_000,
) -> dict:
    right, left = dihedral_tables(d)
    report: dict = {"n": d.n}
    report["cube_right"] = {"ok": certify(right), "failures": [str(f) for f in right.cube_failures]}
    report["cube_left"] = {"ok": certify(left), "failures": [str(f) for f in left.cube_failures]}
    g = gs.build_generic(build_dihedral(d), d.delta, right, left, params=d)
    n = d.n
    rho = lambda k: (RHO,) * k  # noqa: E731
    pieces = {
        "t1": ((T1,), (RHO, T2) + rho(n)),
        "t2": ((T2,), rho(n) + (T1, RHO)),
    }
    comp = {}
    for name, (atom, y) in pieces.items():
        comp[name] = g.equal(atom + y, d.delta) and g.equal(y + atom, d.delta)
    report["complements"] = {"ok": all(comp.values()), **comp}
    axioms = gs.check_garside_axioms(g)
    report["axioms"] = axioms
    report["simples"] = len(g.simples)
    if oracle:
        radius, b = _check_radius(d, g.presentation, budget)
        ball = enumerate_ball(g.presentation, radius, budget=b)
        report["oracle"] = oracle_cross_check(ball, g, sample_budget=sample_budget)
        report["oracle"]["radius"] = radius
    report["ok"] = all(v["ok"] for v in report.values() if isinstance(v, dict))
    return report


# --------------------------------------------------------------------------
# isomorphism with the Artin group I2(2n+4)

S, T = 1, 2  # generators of the Artin presentation, named s (sigma) and t (tau)


def dihedral_maps(d: DihedralParams) -> tuple[GroupHom, GroupHom]:
    """tau_1 -> t, tau_2 -> s t^-1 s^-1 t^-1 s^-1, rho -> t^-1 s^-1; inverse t -> tau_1, s -> (tau_1 rho)^-1."""
    source = build_dihedral(d)
    target = artin_dihedral_presentation(d.artin_type)
    forward = GroupHom(
        source,
        target,
        {T1: (T,), T2: (S, -T, -S, -T, -S), RHO: (-T, -S)},
        name="to_artin",
    )
    backward = GroupHom(target, source, {T: (T1,), S: inverse((T1, RHO))}, name="from_artin")
    return forward, backward


def verify_dihedral_isomorphism(d: DihedralParams) -> dict:
    forward, backward = dihedral_maps(d)
    right, left = dihedral_tables(d)
    mono = GroupBackend(right, left)
    artin = artin_backend(d.artin_type)
    report = {
        "n": d.n,
        "artin_type": d.artin_type,
        "to_artin": verify_homomorphism(forward, artin),
        "from_artin": verify_homomorphism(backward, mono),
        "round_trip_source": check_composition(forward, backward, mono),
        "round_trip_target": check_composition(backward, forward, artin),
    }
    first = forward.source.relations[0]
    report["first_relation_free"] = {
        "ok": not free_reduce(forward.apply(first.lhs) + inverse(forward.apply(first.rhs)))
    }
    if d.n == 1:
        g13 = g13_presentation()
        same = [(r.lhs, r.rhs) for r in g13.relations] == [
            (r.lhs, r.rhs) for r in forward.source.relations
        ]
        report["g13_preset"] = {"ok": same}
    report["ok"] = all(v["ok"] for v in report.values() if isinstance(v, dict))
    return report
