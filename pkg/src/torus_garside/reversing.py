"""Right reversing over a right-complemented presentation.

The syntactic complement on atoms is read off the relations ``s.u = t.v``
(``theta(s, t) = u``, ``theta(t, s) = v``) and extended to words by reversing
negative-positive crossings ``s^-1 t -> theta(s, t) theta(t, s)^-1`` until the
signed word has the shape ``P N^-1``.  For a pair of positive words ``u, v``
the reversal of ``u^-1 v`` ends at ``theta(u, v) theta(v, u)^-1``.

Equality, divisibility and lcm queries are only answered once the table has
passed the sharp cube condition on all triples of distinct atoms (see
:func:`certify`); before that the engine raises :class:`EngineNotCertified`.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .words import EMPTY, Presentation, Word, lambda_length, validate_presentation


class BudgetExceeded(RuntimeError):
    """Reversing ran past its step budget (divergence or an engine bug)."""


class EngineNotCertified(RuntimeError):
    """Equality/divisibility asked of a table without a passing cube certificate."""


class NotComplemented(ValueError):
    pass


SignedWord = Sequence[int]  # +i for rho_i, -i for rho_i^-1


@dataclass
class ComplementTable:
    presentation: Presentation
    atom_map: dict[tuple[int, int], Word]
    # Largest lambda of a simple element; scales the reversing budget.
    scale: int
    certified: bool | None = None
    cube_failures: list = field(default_factory=list)
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def from_presentation(cls, p: Presentation, scale: int | None = None) -> "ComplementTable":
        atom_map: dict[tuple[int, int], Word] = {}
        for rel in p.relations:
            if not rel.lhs or not rel.rhs:
                raise NotComplemented(f"relation with an empty side: {rel}")
            s, t = rel.lhs[0], rel.rhs[0]
            if s == t:
                raise NotComplemented(f"relation {rel} starts with the same letter on both sides")
            if (s, t) in atom_map:
                raise NotComplemented(f"two relations for the pair ({s},{t})")
            atom_map[(s, t)] = rel.lhs[1:]
            atom_map[(t, s)] = rel.rhs[1:]
        if scale is None:
            scale = max((lambda_length(p, r.lhs) for r in p.relations), default=1)
        return cls(presentation=p, atom_map=atom_map, scale=scale)

    @property
    def generators(self) -> range:
        return self.presentation.generators

    def atom(self, s: int, t: int) -> Word | None:
        if s == t:
            return EMPTY
        return self.atom_map.get((s, t))

    def length(self, w: Sequence[int]) -> int:
        return lambda_length(self.presentation, w)

    def budget(self, lam: int) -> int:
        return 4 * (lam + 1) * max(self.scale, 1)

    # ------------------------------------------------------------------
    def reverse_signed(self, w: SignedWord, budget: int | None = None) -> tuple[Word, Word] | None:
        """Right-reverse a signed word to ``(P, N)`` with ``w = P N^-1``.

        Returns None when an atom complement is undefined.
        """
        if budget is None:
            budget = self.budget(sum(self.presentation.weight(abs(x)) for x in w))
        out: list[int] = []
        todo = list(reversed(w))
        steps = 0
        while todo:
            x = todo.pop()
            if x > 0 and out and out[-1] < 0:
                s = -out.pop()
                if s == x:
                    continue
                steps += 1
                if steps > budget:
                    raise BudgetExceeded(
                        f"reversing exceeded {budget} steps on a word of length {len(w)}"
                    )
                a = self.atom_map.get((s, x))
                if a is None:
                    return None
                b = self.atom_map[(x, s)]
                # remaining input becomes theta(s,x) theta(x,s)^-1 rest
                todo.extend([-y for y in b])
                todo.extend(reversed(a))
            else:
                out.append(x)
        pos = [x for x in out if x > 0]
        neg = [-x for x in out if x < 0]
        # out has the form P N^-1, i.e. N^-1 = n_k^-1 ... n_1^-1
        return tuple(pos), tuple(reversed(neg))

    def reverse(self, u: Sequence[int], v: Sequence[int]) -> tuple[Word, Word] | None:
        """``(theta(u, v), theta(v, u))`` or None if undefined."""
        u, v = tuple(u), tuple(v)
        key = (u, v)
        memo = self._memo
        if key in memo:
            return memo[key]
        budget = self.budget(self.length(u) + self.length(v))
        signed = [-x for x in reversed(u)] + list(v)
        result = self.reverse_signed(signed, budget)
        with self._lock:
            memo[key] = result
            if result is not None:
                memo[(v, u)] = (result[1], result[0])
            else:
                memo[(v, u)] = None
        return result

    def require_certified(self) -> None:
        if self.certified is None:
            certify(self)
        if not self.certified:
            raise EngineNotCertified(
                f"{self.presentation.label or 'table'} fails the sharp cube condition"
            )


# --------------------------------------------------------------------------
# public operations


def extend_complement(t: ComplementTable, u: Sequence[int], v: Sequence[int]) -> Word | None:
    """theta(u, v) for words, or None where undefined."""
    res = t.reverse(u, v)
    return None if res is None else res[0]


@dataclass(frozen=True)
class CubeResult:
    status: str  # "pass", "fail" or "undefined" (both sides undefined)
    lhs: Word | None
    rhs: Word | None
    triple: tuple[Word, Word, Word]

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _iterated(t: ComplementTable, a: Word, b: Word, c: Word) -> Word | None:
    ab = extend_complement(t, a, b)
    ac = extend_complement(t, a, c)
    if ab is None or ac is None:
        return None
    return extend_complement(t, ab, ac)


def cube_check(
    t: ComplementTable,
    a: Sequence[int],
    b: Sequence[int],
    c: Sequence[int],
    sharp: bool = True,
    equal: Callable[[Word, Word], bool] | None = None,
) -> CubeResult:
    """Compare theta(theta(a,b), theta(a,c)) with theta(theta(b,a), theta(b,c)).

    Sharp mode wants letterwise equality; lax mode equality in the monoid,
    decided by ``equal`` (default: :func:`words_equal` on a certified table,
    otherwise the brute-force oracle).
    """
    a, b, c = tuple(a), tuple(b), tuple(c)
    lhs = _iterated(t, a, b, c)
    rhs = _iterated(t, b, a, c)
    triple = (a, b, c)
    if lhs is None and rhs is None:
        return CubeResult("undefined", None, None, triple)
    if lhs is None or rhs is None:
        return CubeResult("fail", lhs, rhs, triple)
    if sharp:
        same = lhs == rhs
    else:
        if equal is None:
            equal = _default_lax_equal(t)
        same = equal(lhs, rhs)
    return CubeResult("pass" if same else "fail", lhs, rhs, triple)


def _default_lax_equal(t: ComplementTable) -> Callable[[Word, Word], bool]:
    if t.certified:
        return lambda x, y: words_equal(t, x, y)
    from .oracle import enumerate_ball, oracle_equal

    def eq(x: Word, y: Word) -> bool:
        lam = max(t.length(x), t.length(y))
        ball = enumerate_ball(t.presentation, lam)
        return oracle_equal(ball, x, y)

    return eq


def certify(t: ComplementTable) -> bool:
    """Run the sharp cube check on every triple of pairwise distinct atoms."""
    problems = [v for v in validate_presentation(t.presentation) if "inhomogeneous" in v]
    failures: list = list(problems)
    for a, b, c in itertools.permutations(t.generators, 3):
        res = cube_check(t, (a,), (b,), (c,), sharp=True)
        if not res.ok:
            failures.append(res)
    t.cube_failures = failures
    t.certified = not failures
    return t.certified


def words_equal(t: ComplementTable, u: Sequence[int], v: Sequence[int]) -> bool:
    t.require_certified()
    u, v = tuple(u), tuple(v)
    if u == v:
        return True
    if t.length(u) != t.length(v):
        return False
    res = t.reverse(u, v)
    return res is not None and not res[0] and not res[1]


def left_quotient(t: ComplementTable, u: Sequence[int], w: Sequence[int]) -> Word | None:
    """The word ``q`` with ``u q = w`` when ``u`` left-divides ``w``, else None."""
    t.require_certified()
    if t.length(u) > t.length(w):
        return None
    res = t.reverse(u, w)
    if res is None or res[1]:
        return None
    return res[0]


def left_divides(t: ComplementTable, u: Sequence[int], w: Sequence[int]) -> bool:
    return left_quotient(t, u, w) is not None


def right_lcm(t: ComplementTable, u: Sequence[int], v: Sequence[int]) -> Word | None:
    """``u theta(u, v)``, the right-lcm, or None if no common right-multiple."""
    t.require_certified()
    res = t.reverse(u, v)
    if res is None:
        return None
    return tuple(u) + res[0]
