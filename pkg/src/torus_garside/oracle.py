"""Brute-force congruence classes on bounded-lambda balls.

Every word of lambda-length at most ``max_lambda`` is generated and the words
of each stratum are merged with union-find along single relation applications.
Homogeneity keeps strata apart, so each one is processed on its own.  Words
are stored as strings (one character per letter) so that relation matching is
a plain substring search.
"""

from __future__ import annotations

import bisect
import os
import random
from dataclasses import dataclass, field
from typing import Sequence

from .words import Presentation, Word, lambda_length, validate_presentation

DEFAULT_BUDGET = 10**6


class OracleBudgetExceeded(RuntimeError):
    pass


class OutOfBall(ValueError):
    pass


def configured_budget() -> int:
    raw = os.environ.get("GARSIDE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _enc(w: Sequence[int]) -> str:
    return "".join(chr(64 + x) for x in w)


def _dec(s: str) -> Word:
    return tuple(ord(c) - 64 for c in s)


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


@dataclass
class BallEnumeration:
    presentation: Presentation
    max_lambda: int
    # per stratum: encoded words, and the class id of each word
    words: list[list[str]] = field(default_factory=list)
    class_of: dict[str, int] = field(default_factory=dict)
    # class id -> member strings; class ids are global and stratum-ordered
    members: list[list[str]] = field(default_factory=list)
    class_lambda: list[int] = field(default_factory=list)

    def class_id(self, w: Sequence[int]) -> int:
        lam = lambda_length(self.presentation, w)
        if lam > self.max_lambda:
            raise OutOfBall(f"word of lambda {lam} outside ball of radius {self.max_lambda}")
        return self.class_of[_enc(w)]

    def rep(self, c: int) -> Word:
        return _dec(self.members[c][0])

    def class_words(self, c: int) -> list[Word]:
        return [_dec(s) for s in self.members[c]]

    def classes_at(self, lam: int) -> list[int]:
        return [c for c, l in enumerate(self.class_lambda) if l == lam]

    def stratum_counts(self) -> list[tuple[int, int]]:
        """(words, classes) per lambda value."""
        out = []
        for lam, ws in enumerate(self.words):
            out.append((len(ws), sum(1 for l in self.class_lambda if l == lam)))
        return out

    # -- divisibility inside the ball ------------------------------------
    def left_divisors(self, c: int) -> set[int]:
        """Classes of all prefixes of all words in class ``c``."""
        return {self.class_of[s[:k]] for s in self.members[c] for k in range(len(s) + 1)}

    def right_divisors(self, c: int) -> set[int]:
        return {self.class_of[s[k:]] for s in self.members[c] for k in range(len(s) + 1)}

    def _classes_upto(self, lam: int) -> range:
        # class ids are assigned stratum by stratum, so class_lambda is sorted
        return range(bisect.bisect_right(self.class_lambda, lam))

    def right_multiples(self, c: int) -> set[int]:
        """Classes ``c * y`` that fit in the ball."""
        base = self.members[c][0]
        room = self.max_lambda - self.class_lambda[c]
        return {self.class_of[base + self.members[y][0]] for y in self._classes_upto(room)}

    def left_multiples(self, c: int) -> set[int]:
        base = self.members[c][0]
        room = self.max_lambda - self.class_lambda[c]
        return {self.class_of[self.members[y][0] + base] for y in self._classes_upto(room)}

    def multiply(self, a: int, b: int) -> int | None:
        s = self.members[a][0] + self.members[b][0]
        return self.class_of.get(s)


def enumerate_ball(p: Presentation, max_lambda: int, budget: int | None = None) -> BallEnumeration:
    if max_lambda < 0:
        raise ValueError("max_lambda must be nonnegative")
    bad = [v for v in validate_presentation(p) if "inhomogeneous" in v or "empty side" in v]
    if bad:
        raise ValueError(f"presentation is not homogeneous: {bad[0]}")
    budget = budget or configured_budget()
    weights = p.weights
    rels = [(_enc(r.lhs), _enc(r.rhs)) for r in p.relations]
    ball = BallEnumeration(p, max_lambda)
    letters = [(chr(64 + a), weights[a - 1]) for a in p.generators]

    for lam in range(max_lambda + 1):
        if lam == 0:
            stratum = [""]
        else:
            stratum = [
                w + ch
                for ch, wt in letters
                if wt <= lam
                for w in ball.words[lam - wt]
            ]
        if len(stratum) > budget:
            raise OracleBudgetExceeded(
                f"stratum lambda={lam} has {len(stratum)} words (budget {budget})"
            )
        stratum.sort()
        index = {w: i for i, w in enumerate(stratum)}
        parent = list(range(len(stratum)))
        for i, w in enumerate(stratum):
            for lhs, rhs in rels:
                for src, dst in ((lhs, rhs), (rhs, lhs)):
                    pos = w.find(src)
                    while pos >= 0:
                        j = index[w[:pos] + dst + w[pos + len(src):]]
                        ri, rj = _find(parent, i), _find(parent, j)
                        if ri != rj:
                            parent[max(ri, rj)] = min(ri, rj)
                        pos = w.find(src, pos + 1)
        groups: dict[int, list[str]] = {}
        for i, w in enumerate(stratum):
            groups.setdefault(_find(parent, i), []).append(w)
        for root in sorted(groups):
            cid = len(ball.members)
            ball.members.append(groups[root])
            ball.class_lambda.append(lam)
            for w in groups[root]:
                ball.class_of[w] = cid
        ball.words.append(stratum)
    return ball


def oracle_equal(b: BallEnumeration, u: Sequence[int], v: Sequence[int]) -> bool:
    return b.class_id(u) == b.class_id(v)


def stratum_sizes(p: Presentation, max_lambda: int) -> list[int]:
    """Number of words of each lambda-length, without building them."""
    sizes = [1] + [0] * max_lambda
    for lam in range(1, max_lambda + 1):
        sizes[lam] = sum(sizes[lam - w] for w in p.weights if w <= lam)
    return sizes


def default_radius(p: Presentation, lam_delta: int, budget: int | None = None) -> int:
    """``lambda(Delta) + 2 * max weight``, shrunk until every stratum fits the budget."""
    budget = budget or configured_budget()
    radius = lam_delta + 2 * max(p.weights)
    sizes = stratum_sizes(p, radius)
    while radius > 0 and sizes[radius] > budget:
        radius -= 1
    return radius


# --------------------------------------------------------------------------
# audits


def cancellativity_audit(b: BallEnumeration) -> dict:
    """Atom multiplication must be injective on classes, on both sides.

    Injectivity for atoms gives cancellation of arbitrary left/right factors
    by induction, for every triple inside the ball.
    """
    failures = []
    p = b.presentation
    for a in p.generators:
        ch = chr(64 + a)
        wt = p.weight(a)
        for side in ("left", "right"):
            image: dict[int, int] = {}
            for c, lam in enumerate(b.class_lambda):
                if lam + wt > b.max_lambda:
                    continue
                base = b.members[c][0]
                target = b.class_of[ch + base if side == "left" else base + ch]
                if target in image:
                    failures.append(
                        {"side": side, "atom": a, "classes": [image[target], c], "image": target}
                    )
                else:
                    image[target] = c
    return {"ok": not failures, "failures": failures[:10]}


def congruence_sample(b: BallEnumeration, samples: int = 200, seed: int = 0) -> dict:
    """Spot-check u ~ v => au ~ av and ua ~ va for random classes."""
    rng = random.Random(seed)
    p = b.presentation
    failures = []
    multi = [c for c, m in enumerate(b.members) if len(m) > 1]
    for _ in range(samples if multi else 0):
        c = rng.choice(multi)
        u, v = rng.sample(b.members[c], 2)
        a = rng.choice(list(p.generators))
        if b.class_lambda[c] + p.weight(a) > b.max_lambda:
            continue
        ch = chr(64 + a)
        if b.class_of[ch + u] != b.class_of[ch + v] or b.class_of[u + ch] != b.class_of[v + ch]:
            failures.append((u, v, a))
    return {"ok": not failures, "failures": failures[:10]}


def oracle_cross_check(
    b: BallEnumeration, g, sample_budget: int = 100_000, lcm_pairs: int = 40, seed: int = 0
) -> dict:
    """Compare a Garside structure's engine answers against the ball.

    (a) equality on same-lambda pairs (exhaustive when cheap, else sampled),
    (b) cancellativity, (c) lcm below every common multiple,
    (d) gcd above every common divisor, (e) simples = divisors of Delta.
    """
    from . import garside as gs

    p = b.presentation
    if p.weights != g.presentation.weights or p.generator_count != g.presentation.generator_count:
        raise ValueError("ball and structure are over different presentations")
    rng = random.Random(seed)
    report: dict[str, dict] = {}

    # (a) equality
    mismatches = []
    checked = 0
    total_pairs = sum(len(ws) * (len(ws) - 1) // 2 for ws in b.words)
    if total_pairs <= sample_budget:
        for ws in b.words:
            for i in range(len(ws)):
                for j in range(i + 1, len(ws)):
                    u, v = _dec(ws[i]), _dec(ws[j])
                    checked += 1
                    if g.equal(u, v) != (b.class_of[ws[i]] == b.class_of[ws[j]]):
                        mismatches.append((ws[i], ws[j]))
        mode = "exhaustive"
    else:
        strata = [ws for ws in b.words if len(ws) > 1]
        for k in range(sample_budget):
            ws = rng.choice(strata)
            x = rng.choice(ws)
            if k % 2:
                y = rng.choice(b.members[b.class_of[x]])  # bias toward positives
            else:
                y = rng.choice(ws)
            checked += 1
            if g.equal(_dec(x), _dec(y)) != (b.class_of[x] == b.class_of[y]):
                mismatches.append((x, y))
        mode = "sampled"
    report["equal"] = {"ok": not mismatches, "mode": mode, "pairs": checked,
                       "mismatches": mismatches[:10]}

    # (b) cancellativity
    report["cancel"] = cancellativity_audit(b)

    # (c)/(d) lcm and gcd on sampled pairs of small classes
    # Operands of moderate size keep the multiple sets (and their cost) bounded.
    half = b.max_lambda // 2
    small = [c for c, lam in enumerate(b.class_lambda) if half // 2 <= lam <= half] or [0]
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(min(lcm_pairs, len(small) ** 2))]
    lcm_fail, gcd_fail = [], []
    for cu, cv in pairs:
        u, v = b.rep(cu), b.rep(cv)
        for side in ("right", "left"):
            l = gs.lcm(g, side, u, v)
            mult = b.right_multiples if side == "right" else b.left_multiples
            common = mult(cu) & mult(cv)
            if lambda_length(p, l) <= b.max_lambda:
                cl = b.class_id(l)
                if cl not in common or not common <= mult(cl):
                    lcm_fail.append((side, u, v))
            elif common:
                lcm_fail.append((side, u, v))
            gside = "left" if side == "right" else "right"
            d = gs.gcd(g, gside, u, v)
            divs = b.left_divisors if gside == "left" else b.right_divisors
            commond = divs(cu) & divs(cv)
            cd = b.class_id(d)
            if cd not in commond or not commond <= divs(cd):
                gcd_fail.append((gside, u, v))
    report["lcm"] = {"ok": not lcm_fail, "pairs": len(pairs), "failures": lcm_fail[:10]}
    report["gcd"] = {"ok": not gcd_fail, "pairs": len(pairs), "failures": gcd_fail[:10]}

    # (e) simples against the divisors of Delta
    lam_delta = lambda_length(p, g.delta)
    if lam_delta <= b.max_lambda:
        cdelta = b.class_id(g.delta)
        engine = {b.class_id(s) for s in g.simples}
        left = b.left_divisors(cdelta)
        right = b.right_divisors(cdelta)
        ok = engine == left == right and len(engine) == len(g.simples)
        report["simples"] = {"ok": ok, "engine": len(g.simples), "left": len(left),
                             "right": len(right)}
    else:
        report["simples"] = {"ok": True, "skipped": "ball smaller than Delta"}
    report["ok"] = all(v["ok"] for v in report.values())
    return report
