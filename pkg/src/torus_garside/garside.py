"""Garside structure: Delta, its simple divisors, both divisibility lattices,
greedy normal forms and two-sided lcm/gcd.

The structure is built in stages.  First the two complement tables are
certified (right table for left-divisibility, opposite table for
right-divisibility).  Then the simples are enumerated by a closure that only
needs ``left_divides`` and ``words_equal``; each class gets a canonical word by
dynamic programming over its atom predecessors.  Lattices and normal forms are
layered on top of that finished set.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .params import TorusParams
from .presentations import (
    PresentationVariant,
    build_presentation,
    complement_of_atom_word,
    delta_word,
    opposite_right_oriented,
)
from .reversing import ComplementTable, EngineNotCertified, left_divides, right_lcm, words_equal
from .words import EMPTY, Presentation, Word, lambda_length


def word_key(w: Sequence[int]) -> tuple:
    """Order used to pick canonical words: fewer letters, then larger indices first."""
    return (len(w), tuple(-x for x in w))


def _rev(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


@dataclass
class GarsideStructure:
    presentation: Presentation
    delta: Word
    right_table: ComplementTable
    left_table: ComplementTable
    params: object = None
    simples: list[Word] = field(default_factory=list)
    lambdas: list[int] = field(default_factory=list)
    # succ[s][a-1]: index of the simple s*a, or None
    succ: list[list[int | None]] = field(default_factory=list)
    # pred_left[s][a-1]: index of the simple a*s, or None
    pred_left: list[list[int | None]] = field(default_factory=list)
    left_div: list[int] = field(default_factory=list)  # bitsets of left-divisors
    right_div: list[int] = field(default_factory=list)
    right_divisors_of_delta: int = 0
    _buckets: dict = field(default_factory=dict, repr=False)
    _meet: dict = field(default_factory=dict, repr=False)

    @property
    def n_atoms(self) -> int:
        return self.presentation.generator_count

    @property
    def delta_index(self) -> int:
        return len(self.simples) - 1 if self.simples else -1

    def length(self, w: Sequence[int]) -> int:
        return lambda_length(self.presentation, w)

    # -- element-level primitives -------------------------------------
    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return words_equal(self.right_table, u, v)

    def left_divides(self, u: Sequence[int], w: Sequence[int]) -> bool:
        return left_divides(self.right_table, u, w)

    def right_divides(self, u: Sequence[int], w: Sequence[int]) -> bool:
        return left_divides(self.left_table, _rev(u), _rev(w))

    def left_quotient(self, u: Sequence[int], w: Sequence[int]) -> Word:
        """``u^-1 w`` for ``u`` a left-divisor of ``w``."""
        res = self.right_table.reverse(tuple(u), tuple(w))
        if res is None or res[1]:
            raise ValueError("not a left-divisor")
        return res[0]

    def right_quotient(self, w: Sequence[int], u: Sequence[int]) -> Word:
        """``w u^-1`` for ``u`` a right-divisor of ``w``."""
        res = self.left_table.reverse(_rev(u), _rev(w))
        if res is None or res[1]:
            raise ValueError("not a right-divisor")
        return _rev(res[0])

    def _atom_profile(self, w: Word) -> tuple:
        left = tuple(a for a in self.presentation.generators if self.left_divides((a,), w))
        right = tuple(a for a in self.presentation.generators if self.right_divides((a,), w))
        return self.length(w), left, right

    def find_simple(self, w: Sequence[int]) -> int | None:
        """Index of the simple equal to ``w``, or None when ``w`` is not simple."""
        w = tuple(w)
        for idx in self._buckets.get(self._atom_profile(w), ()):
            if self.equal(self.simples[idx], w):
                return idx
        return None

    def is_simple(self, w: Sequence[int]) -> bool:
        return self.left_divides(w, self.delta)


def build_generic(
    presentation: Presentation,
    delta: Word,
    right_table: ComplementTable,
    left_table: ComplementTable,
    params: object = None,
) -> GarsideStructure:
    for table in (right_table, left_table):
        try:
            table.require_certified()
        except EngineNotCertified as exc:
            raise RuntimeError(f"complement table failed certification: {exc}") from exc
    g = GarsideStructure(presentation, tuple(delta), right_table, left_table, params)
    _enumerate_simples(g)
    _fill_left_edges(g)
    g.left_div = _closure(g, g.succ)
    g.right_div = _closure(g, g.pred_left)
    g.right_divisors_of_delta = _count_right_divisors(g)
    return g


def build_structure(p: TorusParams) -> GarsideStructure:
    lam_delta = p.n * p.m
    right = ComplementTable.from_presentation(
        build_presentation(p, PresentationVariant.LEFT_COMPLEMENTED), scale=lam_delta
    )
    left = ComplementTable.from_presentation(opposite_right_oriented(p), scale=lam_delta)
    practical = build_presentation(p, PresentationVariant.PRACTICAL)
    return build_generic(practical, delta_word(p), right, left, params=p)


# --------------------------------------------------------------------------
# staged construction


def _enumerate_simples(g: GarsideStructure) -> None:
    """Closure from the unit under right multiplication by atoms, inside Div(Delta).

    Classes are merged with ``words_equal`` inside buckets keyed by
    (lambda, left atoms, right atoms); the canonical word of a class is the
    best ``canonical(pred) + atom`` over its predecessors, all of which have
    smaller lambda and are therefore final when the class is popped.
    """
    gens = list(g.presentation.generators)
    words: list[Word] = []
    profiles: list[tuple] = []
    edges: list[list[int | None]] = []
    heap: list[tuple] = []

    def insert(w: Word) -> int:
        prof = g._atom_profile(w)
        for idx in g._buckets.get(prof, ()):
            if g.equal(words[idx], w):
                if word_key(w) < word_key(words[idx]):
                    words[idx] = w
                return idx
        idx = len(words)
        words.append(w)
        profiles.append(prof)
        edges.append([None] * len(gens))
        g._buckets.setdefault(prof, []).append(idx)
        heapq.heappush(heap, (prof[0], idx))
        return idx

    g.simples = words  # find_simple reads from here during construction
    insert(EMPTY)
    while heap:
        _, idx = heapq.heappop(heap)
        base = words[idx]
        for a in gens:
            w = base + (a,)
            if g.is_simple(w):
                edges[idx][a - 1] = insert(w)

    # Renumber by (lambda, canonical word) so indices are deterministic.
    order = sorted(range(len(words)), key=lambda i: (profiles[i][0], word_key(words[i])))
    new_of = {old: new for new, old in enumerate(order)}
    g.simples = [words[i] for i in order]
    g.lambdas = [profiles[i][0] for i in order]
    g.succ = [[None if e is None else new_of[e] for e in edges[i]] for i in order]
    g._buckets = {}
    for new, old in enumerate(order):
        g._buckets.setdefault(profiles[old], []).append(new)
    if not g.equal(g.simples[-1], g.delta):
        raise RuntimeError("Delta is not the unique simple of maximal length")


def _fill_left_edges(g: GarsideStructure) -> None:
    gens = list(g.presentation.generators)
    g.pred_left = []
    for w in g.simples:
        row: list[int | None] = []
        for a in gens:
            aw = (a,) + w
            row.append(g.find_simple(aw) if g.is_simple(aw) else None)
        g.pred_left.append(row)


def _closure(g: GarsideStructure, edges: list[list[int | None]]) -> list[int]:
    """Divisor bitsets: Div(t) = {t} u Div(s) for every edge s -> t."""
    div = [1 << i for i in range(len(g.simples))]
    for s in range(len(g.simples)):  # indices are in increasing lambda
        for t in edges[s]:
            if t is not None:
                div[t] |= div[s]
    return div


def _count_right_divisors(g: GarsideStructure) -> int:
    """Enumerate right-divisors of Delta independently and map them onto simples.

    Returns the number of distinct right-divisors found; each is required to
    already be a (left-divisor) simple.
    """
    seen = {0}
    stack = [EMPTY]
    while stack:
        w = stack.pop()
        for a in g.presentation.generators:
            aw = (a,) + w
            if not g.right_divides(aw, g.delta):
                continue
            idx = g.find_simple(aw)
            if idx is None:
                raise RuntimeError(f"right-divisor {aw} of Delta is not a left-divisor")
            if idx not in seen:
                seen.add(idx)
                stack.append(g.simples[idx])
    return len(seen)


# --------------------------------------------------------------------------
# lattice operations on simples (bitset based)


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def multiples_bits(g: GarsideStructure, side: str) -> list[int]:
    key = ("mult", side)
    if key not in g._meet:
        div = g.left_div if side == "left" else g.right_div
        mult = [0] * len(div)
        for t, bits in enumerate(div):
            b = bits
            while b:
                s = _lowest(b)
                mult[s] |= 1 << t
                b &= b - 1
        g._meet[key] = mult
    return g._meet[key]


def simple_meet(g: GarsideStructure, side: str, s: int, t: int) -> int:
    """Greatest common divisor of two simples (``side`` divisibility)."""
    div = g.left_div if side == "left" else g.right_div
    common = div[s] & div[t]
    top = common.bit_length() - 1
    if common & ~div[top]:
        raise RuntimeError(f"no meet for simples {s}, {t}")
    return top


def simple_join(g: GarsideStructure, side: str, s: int, t: int) -> int:
    mult = multiples_bits(g, side)
    common = mult[s] & mult[t]
    bottom = _lowest(common)
    if common & ~mult[bottom]:
        raise RuntimeError(f"no join for simples {s}, {t}")
    return bottom


def lattice_tables(g: GarsideStructure, side: str) -> tuple[list[list[int]], list[list[int]]]:
    """Full meet and join tables (N x N) for one side."""
    n = len(g.simples)
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(s, n):
            meet[s][t] = meet[t][s] = simple_meet(g, side, s, t)
            join[s][t] = join[t][s] = simple_join(g, side, s, t)
    return meet, join


def check_lattice(g: GarsideStructure, side: str) -> list[str]:
    """Every pair of simples has a meet and a join; returns failures."""
    div = g.left_div if side == "left" else g.right_div
    mult = multiples_bits(g, side)
    problems = []
    n = len(g.simples)
    for s in range(n):
        for t in range(s + 1, n):
            common = div[s] & div[t]
            if common & ~div[common.bit_length() - 1]:
                problems.append(f"{side} meet missing for {s},{t}")
            common = mult[s] & mult[t]
            if not common or common & ~mult[_lowest(common)]:
                problems.append(f"{side} join missing for {s},{t}")
    return problems


def covers(g: GarsideStructure, side: str) -> list[tuple[int, int]]:
    """Covering pairs (s, t): t = s*a (left) or t = a*s (right) for an atom a."""
    edges = g.succ if side == "left" else g.pred_left
    out = set()
    for s, row in enumerate(edges):
        for t in row:
            if t is not None:
                out.add((s, t))
    return sorted(out)


# --------------------------------------------------------------------------
# element-level operations


def complement_of_atom(g: GarsideStructure, i: int) -> Word:
    """The word ``a_i`` with ``a_i rho_i = rho_i a_i = Delta``."""
    if isinstance(g.params, TorusParams):
        word = complement_of_atom_word(g.params, i)
    else:
        word = g.left_quotient((i,), g.delta)
    if not (g.equal(word + (i,), g.delta) and g.equal((i,) + word, g.delta)):
        raise RuntimeError(f"complement of atom {i} does not multiply to Delta")
    return word


def head(g: GarsideStructure, w: Sequence[int]) -> int:
    """Index of the left-gcd of Delta and ``w`` among the simples."""
    w = tuple(w)
    cur = 0
    while True:
        for a, nxt in enumerate(g.succ[cur], start=1):
            if nxt is not None and g.left_divides(g.simples[nxt], w):
                cur = nxt
                break
        else:
            return cur


def normal_form_indices(g: GarsideStructure, w: Sequence[int]) -> list[int]:
    out = []
    rest = tuple(w)
    while rest:
        h = head(g, rest)
        if h == 0:
            raise RuntimeError("nonempty word with trivial head")
        out.append(h)
        rest = g.left_quotient(g.simples[h], rest)
    return out


def normal_form(g: GarsideStructure, w: Sequence[int]) -> list[Word]:
    return [g.simples[i] for i in normal_form_indices(g, w)]


def canonical_word(g: GarsideStructure, w: Sequence[int]) -> Word:
    """Concatenated canonical words of the normal form (the simple's word for simples)."""
    out: list[int] = []
    for s in normal_form(g, w):
        out.extend(s)
    return tuple(out)


def lcm(g: GarsideStructure, side: str, u: Sequence[int], v: Sequence[int]) -> Word:
    """Right-lcm (``side="right"``: common right-multiple) or left-lcm."""
    _check_side(side)
    if side == "right":
        res = right_lcm(g.right_table, u, v)
    else:
        r = right_lcm(g.left_table, _rev(u), _rev(v))
        res = None if r is None else _rev(r)
    if res is None:
        raise RuntimeError("lcm undefined in a Garside monoid")
    return canonical_word(g, res)


def lcm_all(g: GarsideStructure, side: str, words: Sequence[Sequence[int]]) -> Word:
    acc: Word = EMPTY
    for w in words:
        acc = lcm(g, side, acc, w)
    return acc


def gcd(g: GarsideStructure, side: str, u: Sequence[int], v: Sequence[int]) -> Word:
    """Greatest common left-divisor (``side="left"``) or right-divisor.

    Peels off the least-index atom dividing both words until none is left.
    """
    _check_side(side)
    u, v = tuple(u), tuple(v)
    acc: list[int] = []
    while True:
        for a in g.presentation.generators:
            if side == "left":
                if g.left_divides((a,), u) and g.left_divides((a,), v):
                    acc.append(a)
                    u, v = g.left_quotient((a,), u), g.left_quotient((a,), v)
                    break
            else:
                if g.right_divides((a,), u) and g.right_divides((a,), v):
                    acc.insert(0, a)
                    u, v = g.right_quotient(u, (a,)), g.right_quotient(v, (a,))
                    break
        else:
            return canonical_word(g, tuple(acc))


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


# --------------------------------------------------------------------------
# audit


def check_garside_axioms(g: GarsideStructure) -> dict:
    report: dict[str, dict] = {}
    n_simples = len(g.simples)
    report["divisors_coincide"] = {
        "ok": g.right_divisors_of_delta == n_simples,
        "left": n_simples,
        "right": g.right_divisors_of_delta,
    }
    missing = [a for a in g.presentation.generators if g.find_simple((a,)) is None]
    report["atoms_simple"] = {"ok": not missing, "missing": missing}
    report["finite"] = {"ok": n_simples > 0, "count": n_simples}
    lat = check_lattice(g, "left") + check_lattice(g, "right")
    bottom_top = (
        g.left_div[-1] == (1 << n_simples) - 1 and g.right_div[-1] == (1 << n_simples) - 1
    )
    report["lattices"] = {"ok": not lat and bottom_top, "failures": lat[:10]}
    noncentral = [
        a for a in g.presentation.generators if not g.equal(g.delta + (a,), (a,) + g.delta)
    ]
    report["delta_central"] = {"ok": not noncentral, "failures": noncentral}
    report["ok"] = all(v["ok"] for v in report.values())
    return report


def structure_summary(g: GarsideStructure) -> dict:
    return {
        "delta": list(g.delta),
        "lambda_delta": g.length(g.delta),
        "simples": len(g.simples),
    }
