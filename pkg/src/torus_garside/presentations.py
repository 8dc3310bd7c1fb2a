"""Presentations of M(n, m) and closed-form complements on atoms.

Generators are rho_1..rho_n (names ``r1..rn``) with weight ``lambda(rho_i) = k_i``.
The opposite monoid uses tau_1..tau_n (``t1..tn``) with the same indices and
weights.  Closed forms below are evaluated directly from the defect tables,
independently of the generic reversing engine, so the two can be compared.
"""

from __future__ import annotations

import enum
from typing import Iterator

from .params import TorusParams
from .words import (
    EMPTY,
    Presentation,
    Variant,
    Word,
    cat,
    make_presentation,
    opposite_presentation,
    power,
)


class PresentationVariant(enum.Enum):
    OMEGA = "omega"
    PRACTICAL = "practical"
    LEFT_COMPLEMENTED = "r1"
    RIGHT_ORIENTED = "r2"
    CLASSICAL_XY = "classical"
    STANDARD_CYCLIC = "standard"
    DUAL_CYCLIC = "dual"


def rho_names(n: int) -> tuple[str, ...]:
    return tuple(f"r{i}" for i in range(1, n + 1))


def tau_names(n: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(1, n + 1))


def rho_weights(p: TorusParams) -> tuple[int, ...]:
    return p.k


def omega_index(p: TorusParams, i: int) -> int:
    """rho_i is omega_{k_i}."""
    return p.k_of(i)


def rn(p: TorusParams, e: int) -> Word:
    if e < 0:
        raise ValueError(f"negative exponent {e} for rho_n")
    return (p.n,) * e


def x_block(p: TorusParams, e: int = 1) -> Word:
    """``(rho_1 rho_n^q)^e``."""
    return power((1,) + rn(p, p.q), e)


def tau_block(p: TorusParams, e: int = 1) -> Word:
    """``(tau_n^q tau_1)^e`` in the opposite monoid."""
    return power(rn(p, p.q) + (1,), e)


# --------------------------------------------------------------------------
# relation families


def practical_relations(p: TorusParams) -> Iterator[tuple[Word, Word]]:
    for i in range(1, p.n):
        yield cat((1,), rn(p, p.q), (i,)), cat((i + 1,), rn(p, p.q + p.D(i)))


def left_complemented_relations(p: TorusParams) -> Iterator[tuple[Word, Word]]:
    for i in range(1, p.n + 1):
        for j in range(i + 1, p.n + 1):
            yield (i,) + theta_atoms(p, i, j), (j,) + theta_atoms(p, j, i)


def right_oriented_relations(p: TorusParams) -> Iterator[tuple[Word, Word]]:
    n, q = p.n, p.q
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if p.Dij(i, j) == 1:
                lhs = cat(x_block(p, n - j), (i,))
                rhs = cat((n - j + i,), x_block(p, n - j), (j,))
            else:
                lhs = cat(x_block(p, n - j + 1), (i,))
                rhs = cat(
                    (n - j + i + 1,),
                    rn(p, q - 1 + p.D(n - j + i)),
                    x_block(p, n - j),
                    (j,),
                )
            yield lhs, rhs


def omega_relations(p: TorusParams) -> Iterator[tuple[Word, Word]]:
    n, q, r = p.n, p.q, p.r
    for i in range(1, n + 1):
        if r < i <= n:
            yield cat((r,), (n,) * q, (i - r,)), cat((i,), (n,) * q)
        elif 1 <= i < r:
            yield cat((r,), (n,) * q, (n + i - r,)), cat((i,), (n,) * (q + 1))


def build_presentation(p: TorusParams, v: PresentationVariant | str) -> Presentation:
    v = PresentationVariant(v)
    n, m = p.n, p.m
    label = f"M({n},{m}) {v.value}"
    if v is PresentationVariant.PRACTICAL:
        return make_presentation(
            n, practical_relations(p), rho_weights(p), Variant.PRACTICAL, rho_names(n), label
        )
    if v is PresentationVariant.LEFT_COMPLEMENTED:
        return make_presentation(
            n,
            left_complemented_relations(p),
            rho_weights(p),
            Variant.LEFT_COMPLEMENTED,
            rho_names(n),
            label,
        )
    if v is PresentationVariant.RIGHT_ORIENTED:
        return make_presentation(
            n,
            right_oriented_relations(p),
            rho_weights(p),
            Variant.RIGHT_ORIENTED,
            rho_names(n),
            label,
        )
    if v is PresentationVariant.OMEGA:
        return make_presentation(
            n,
            omega_relations(p),
            tuple(range(1, n + 1)),
            Variant.RAW,
            tuple(f"w{i}" for i in range(1, n + 1)),
            label,
        )
    if v is PresentationVariant.CLASSICAL_XY:
        return classical_presentation(n, m)
    if v is PresentationVariant.STANDARD_CYCLIC:
        return cyclic_presentation(n, m, "x")
    return cyclic_presentation(m, n, "y")


def classical_presentation(n: int, m: int) -> Presentation:
    """``<x, y | x^n = y^m>`` with lambda(x) = m, lambda(y) = n."""
    return make_presentation(
        2,
        [((1,) * n, (2,) * m)],
        (m, n),
        Variant.CLASSICAL,
        ("x", "y"),
        f"G({n},{m}) classical",
    )


def cyclic_presentation(gens: int, length: int, prefix: str) -> Presentation:
    """``x_1 x_2 ... = x_2 x_3 ... = ...`` with ``length`` factors, indices mod ``gens``."""

    def run(start: int) -> Word:
        return tuple((start - 1 + t) % gens + 1 for t in range(length))

    rels = [(run(i), run(i + 1)) for i in range(1, gens)]
    return make_presentation(
        gens,
        rels,
        (1,) * gens,
        Variant.CLASSICAL,
        tuple(f"{prefix}{i}" for i in range(1, gens + 1)),
        f"cyclic {gens} gens, {length} factors",
    )


def opposite_right_oriented(p: TorusParams) -> Presentation:
    """The reversed relations of the right-oriented presentation, on tau letters."""
    pres = build_presentation(p, PresentationVariant.RIGHT_ORIENTED)
    opp = opposite_presentation(pres)
    return make_presentation(
        p.n,
        [(r.lhs, r.rhs) for r in opp.relations],
        opp.weights,
        Variant.OPPOSITE,
        tau_names(p.n),
        f"M({p.n},{p.m})^op",
    )


# --------------------------------------------------------------------------
# closed-form complements on atoms


def _check_atom(p: TorusParams, i: int) -> None:
    if not 1 <= i <= p.n:
        raise IndexError(f"generator index {i} out of range 1..{p.n}")


def theta_atoms(p: TorusParams, i: int, j: int) -> Word:
    """Right complement theta(rho_i, rho_j) of the left-complemented presentation."""
    _check_atom(p, i)
    _check_atom(p, j)
    if i == j:
        return EMPTY
    q, n = p.q, p.n
    if i < j:
        return rn(p, q * i + p.B(1, n - i + 1)) + (j - i,)
    # i > j: theta(rho_big, rho_small)
    big, small = i, j
    return rn(p, q * small + p.B(big - small, n - small))


def eta_atoms(p: TorusParams, i: int, j: int) -> Word:
    """Right complement eta(tau_i, tau_j) of the reversed right-oriented presentation."""
    _check_atom(p, i)
    _check_atom(p, j)
    if i == j:
        return EMPTY
    n, q = p.n, p.q
    if i < j:
        return tau_block(p, n - j) if p.Dij(i, j) == 1 else tau_block(p, n - j + 1)
    small, big = j, i
    if p.Dij(small, big) == 1:
        return tau_block(p, n - big) + (n - big + small,)
    return cat(
        tau_block(p, n - big),
        rn(p, q - 1 + p.D(n - big + small)),
        (n - big + small + 1,),
    )


ETA_FAMILIES = ("tech_left", "tech_right", "tech_tn_3", "last_tech")


def eta_family_words(p: TorusParams, family: str, i: int, j: int, ell: int = 0) -> tuple[Word, Word]:
    """The (left, right) word pair whose eta the family's closed form describes.

    ``ell = 0`` is the ``tau_n^q`` case; ``1 <= ell < q`` the ``tau_n^(q-ell)`` case.
    """
    _check_family_args(p, family, i, j, ell)
    e = p.q - ell
    if family == "tech_left":
        return rn(p, e) + (i,), (j,)
    if family == "tech_right":
        return (i,), rn(p, e) + (j,)
    if family == "tech_tn_3":
        return rn(p, e) + (j,), (i,)
    return (j,), rn(p, e) + (i,)


def _check_family_args(p: TorusParams, family: str, i: int, j: int, ell: int) -> None:
    if family not in ETA_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    strict = family in ("tech_right", "tech_tn_3")
    if not (1 <= i <= j <= p.n) or (strict and i == j):
        raise IndexError(f"indices ({i},{j}) out of range for {family}")
    if ell != 0 and not (p.q >= 2 and 1 <= ell < p.q):
        raise ValueError(f"shift {ell} needs q >= 2 and 1 <= shift < q (q={p.q})")


def eta_closed_form(p: TorusParams, family: str, i: int, j: int, ell: int = 0) -> Word:
    """Case-split closed form of eta on the pair from :func:`eta_family_words`."""
    _check_family_args(p, family, i, j, ell)
    n, q, D, Dij = p.n, p.q, p.D, p.Dij
    X = lambda e: tau_block(p, e)  # noqa: E731

    if family == "tech_left":
        if ell:
            return X(n - j)
        if D(j) == 0 and Dij(i, j + 1) == 1:
            return X(n - j - 1)
        return X(n - j)

    if family == "tech_right":
        if ell:
            return X(n - j + 1)
        if i + 1 == j and D(i) == 0:
            return X(1)
        if i + 1 != j and D(i) == 0 and Dij(i + 1, j) == 0:
            return X(n - j + 2)
        return X(n - j + 1)

    if family == "tech_tn_3":
        if ell:
            return cat(X(n - j), rn(p, ell - 1 + Dij(i + 1, j) + D(i)), (p.idx(i + n - j + 1),))
        if D(i) == 1:
            return cat(X(n - j), rn(p, Dij(i + 1, j)), (p.idx(i + n - j + 1),))
        return eta_atoms(p, j, i + 1)

    # last_tech
    if ell:
        return cat(
            X(n - j),
            rn(p, q - ell - D(j) - 1 + Dij(i + 1, j + 1) + D(i)),
            (p.idx(i + n - j),),
        )
    if D(j) == 0:
        return X(1) + eta_atoms(p, j + 1, i)
    return cat(
        X(n - j),
        rn(p, q - 1 + Dij(i + 1, j + 1) + D(i) - D(j)),
        (p.idx(i + n - j),),
    )


def eta_family_inputs(p: TorusParams) -> Iterator[tuple[str, int, int, int]]:
    """Every admissible (family, i, j, shift) tuple for these parameters."""
    shifts = [0] + list(range(1, p.q))
    for family in ETA_FAMILIES:
        strict = family in ("tech_right", "tech_tn_3")
        for i in range(1, p.n + 1):
            for j in range(i + (1 if strict else 0), p.n + 1):
                for ell in shifts:
                    yield family, i, j, ell


def complement_of_atom_word(p: TorusParams, i: int) -> Word:
    """``a_i = rho_n^(q i + B(1, n-i+1)) (rho_1 rho_n^q)^(n-i)``, with a_i rho_i = rho_i a_i = Delta."""
    _check_atom(p, i)
    return rn(p, p.q * i + p.B(1, p.n - i + 1)) + x_block(p, p.n - i)


def delta_word(p: TorusParams) -> Word:
    return rn(p, p.m)
